#ifndef PPLUS_FOUR_VECTOR_HPP
#define PPLUS_FOUR_VECTOR_HPP

#include <string>

#include <Eigen/Dense>

namespace pplus {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;

/// Spacetime point or translation a^mu with metric signature (+,-,-,-).
/// Units c = 1 throughout.
struct FourVector {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    FourVector() = default;
    FourVector(double t_, double x_, double y_, double z_) : t(t_), x(x_), y(y_), z(z_) {}
    FourVector(double t_, const Vec3& spatial_) : t(t_), x(spatial_.x()), y(spatial_.y()), z(spatial_.z()) {}

    Vec3 spatial() const { return Vec3(x, y, z); }
    Vec4 components() const { return Vec4(t, x, y, z); }

    static FourVector from_components(const Vec4& c) { return FourVector(c(0), c(1), c(2), c(3)); }

    /// Minkowski square t^2 - |x|^2, always computed from the components.
    double minkowski_square() const { return t * t - x * x - y * y - z * z; }

    double minkowski_dot(const FourVector& b) const {
        return t * b.t - x * b.x - y * b.y - z * b.z;
    }

    FourVector operator+(const FourVector& b) const { return {t + b.t, x + b.x, y + b.y, z + b.z}; }
    FourVector operator-(const FourVector& b) const { return {t - b.t, x - b.x, y - b.y, z - b.z}; }
    FourVector operator-() const { return {-t, -x, -y, -z}; }
    FourVector operator*(double s) const { return {s * t, s * x, s * y, s * z}; }
};

inline FourVector operator*(double s, const FourVector& a) { return a * s; }

/// Four-velocity (u0, uvec) with u0 = sqrt(1 + |uvec|^2).
FourVector four_velocity(const Vec3& uvec);

enum class IntervalClass { InForwardCone, Spacelike, PastPointing };

/// Numerical tolerance promoting near-lightlike intervals into the closed cone.
inline constexpr double kLightlikeTol = 1e-12;

/// Closed forward cone: a0 >= 0 and a^2 >= 0 (lightlike boundary included,
/// with a^2 in [-kLightlikeTol, 0) promoted).
IntervalClass classify_interval(const FourVector& a);

std::string to_string(IntervalClass c);

}  // namespace pplus

#endif
