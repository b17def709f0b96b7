#include "pplus/sampling.hpp"

#include <cmath>
#include <numbers>

namespace pplus {

Vec3 random_unit_vector(Rng& rng) {
    std::uniform_real_distribution<double> mu(-1.0, 1.0);
    std::uniform_real_distribution<double> phi(0.0, 2.0 * std::numbers::pi);
    const double c = mu(rng);
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    const double p = phi(rng);
    return Vec3(s * std::cos(p), s * std::sin(p), c);
}

Vec3 random_velocity(Rng& rng, double u_norm_max) {
    std::uniform_real_distribution<double> r(0.0, u_norm_max);
    return r(rng) * random_unit_vector(rng);
}

LorentzTransform random_rotation(Rng& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    return LorentzTransform::rotation(random_unit_vector(rng), angle(rng));
}

LorentzTransform random_boost(Rng& rng, double u_norm_max) {
    return LorentzTransform::boost(random_velocity(rng, u_norm_max));
}

LorentzTransform random_lorentz(Rng& rng, double u_norm_max) {
    return random_boost(rng, u_norm_max) * random_rotation(rng);
}

SpinorMap random_su2(Rng& rng) {
    // angle range [0, 4 pi) covers both sheets of the double cover
    std::uniform_real_distribution<double> angle(0.0, 4.0 * std::numbers::pi);
    return rotation_lift(random_unit_vector(rng), angle(rng));
}

FourVector random_forward_vector(Rng& rng, double a0_max, bool lightlike) {
    std::uniform_real_distribution<double> a0d(0.0, a0_max);
    std::uniform_real_distribution<double> rho(0.0, 1.0);
    const double a0 = a0d(rng);
    const double r = lightlike ? 1.0 : rho(rng);
    return FourVector(a0, a0 * r * random_unit_vector(rng));
}

FourVector random_four_vector(Rng& rng, double scale) {
    std::uniform_real_distribution<double> d(-scale, scale);
    return FourVector(d(rng), d(rng), d(rng), d(rng));
}

}  // namespace pplus
