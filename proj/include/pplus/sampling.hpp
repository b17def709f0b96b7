#ifndef PPLUS_SAMPLING_HPP
#define PPLUS_SAMPLING_HPP

#include <random>

#include "pplus/lorentz.hpp"

namespace pplus {

using Rng = std::mt19937_64;

Vec3 random_unit_vector(Rng& rng);

/// Velocity vector with |u| uniform in [0, u_norm_max], isotropic direction.
Vec3 random_velocity(Rng& rng, double u_norm_max);

LorentzTransform random_rotation(Rng& rng);

LorentzTransform random_boost(Rng& rng, double u_norm_max);

/// Boost times rotation; rapidity bounded through u_norm_max.
LorentzTransform random_lorentz(Rng& rng, double u_norm_max);

/// Uniformly random SU(2) element.
SpinorMap random_su2(Rng& rng);

/// Translation in the closed forward cone: a0 in [0, a0_max] and
/// |a| = rho a0 with rho in [0,1]; rho = 1 gives a lightlike boundary point.
FourVector random_forward_vector(Rng& rng, double a0_max, bool lightlike = false);

/// Arbitrary spacetime translation, components uniform in [-scale, scale].
FourVector random_four_vector(Rng& rng, double scale);

}  // namespace pplus

#endif
