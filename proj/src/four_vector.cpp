#include "pplus/four_vector.hpp"

#include <cmath>

namespace pplus {

FourVector four_velocity(const Vec3& uvec) {
    return FourVector(std::sqrt(1.0 + uvec.squaredNorm()), uvec);
}

IntervalClass classify_interval(const FourVector& a) {
    const double s = a.minkowski_square();
    if (s < -kLightlikeTol) return IntervalClass::Spacelike;
    return a.t >= 0.0 ? IntervalClass::InForwardCone : IntervalClass::PastPointing;
}

std::string to_string(IntervalClass c) {
    switch (c) {
        case IntervalClass::InForwardCone: return "forward";
        case IntervalClass::Spacelike: return "spacelike";
        case IntervalClass::PastPointing: return "past";
    }
    return "unknown";
}

}  // namespace pplus
