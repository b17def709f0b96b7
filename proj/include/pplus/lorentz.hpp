#ifndef PPLUS_LORENTZ_HPP
#define PPLUS_LORENTZ_HPP

#include <complex>

#include <Eigen/Dense>

#include "pplus/four_vector.hpp"

namespace pplus {

using cplx = std::complex<double>;
using Mat2c = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4d;

/// Unit-determinant 2x2 complex matrix: an element of the double cover
/// carrying boosts (Hermitian positive factors) and rotations (SU(2)).
class SpinorMap {
public:
    explicit SpinorMap(const Mat2c& m);

    static SpinorMap identity();

    const Mat2c& matrix() const { return m_; }

    /// Exact inverse through the adjugate (det == 1).
    SpinorMap inverse() const;

    SpinorMap operator*(const SpinorMap& rhs) const;

    bool is_unitary(double tol = 1e-10) const;

    /// Image of a four-vector under X -> m X m^dagger with X = a^mu sigma_mu.
    FourVector apply(const FourVector& a) const;

    /// The 4x4 vector representation of this map.
    Mat4 vector_matrix() const;

private:
    Mat2c m_;
};

/// Proper orthochronous Lorentz transformation. Carries both the 4x4 matrix
/// and a unit-determinant 2x2 lift; products compose both consistently, so
/// spin-1/2 cocycle identities hold without section-sign surprises.
class LorentzTransform {
public:
    /// Validation tolerance for Lambda^T eta Lambda = eta (max entry).
    static constexpr double kMetricTol = 1e-12;

    static LorentzTransform identity();

    /// Standard boost L(u) with L(u) e0 = (u0, uvec); symmetric pure boost.
    static LorentzTransform boost(const Vec3& uvec);

    /// Rotation about `axis` by `angle`. The lift is faithful to the angle:
    /// rotation(n, 2*pi) has matrix identity but lift -1.
    static LorentzTransform rotation(const Vec3& axis, double angle);

    /// Validates proper orthochronousness and attaches the canonical lift
    /// (polar decomposition into boost * rotation, positive-trace section).
    static LorentzTransform from_matrix(const Mat4& lambda);

    /// 4x4 reconstructed from a unit-determinant 2x2 map.
    static LorentzTransform from_spinor(const SpinorMap& a);

    const Mat4& matrix() const { return lambda_; }
    const SpinorMap& spinor_lift() const { return lift_; }

    LorentzTransform operator*(const LorentzTransform& rhs) const;
    LorentzTransform inverse() const;

    FourVector apply(const FourVector& a) const;

    /// Spatial part of Lambda * (u0, uvec) for the four-velocity over uvec.
    Vec3 apply_velocity(const Vec3& uvec) const;

    bool is_identity(double tol = 1e-14) const;

private:
    LorentzTransform(const Mat4& lam, const SpinorMap& lift) : lambda_(lam), lift_(lift) {}

    Mat4 lambda_;
    SpinorMap lift_;
};

/// Standard boost L(u), free-function spelling.
LorentzTransform standard_boost(const Vec3& uvec);

/// Hermitian positive lift of the standard boost:
/// ((1 + u0) I + uvec . sigma) / sqrt(2 (1 + u0)).
SpinorMap boost_lift(const Vec3& uvec);

/// SU(2) element cos(angle/2) I - i sin(angle/2) (axis . sigma).
SpinorMap rotation_lift(const Vec3& axis, double angle);

/// Minkowski metric diag(+1,-1,-1,-1).
const Mat4& minkowski_metric();

}  // namespace pplus

#endif
