#ifndef PPLUS_POSITION_HPP
#define PPLUS_POSITION_HPP

#include <utility>
#include <vector>

#include "pplus/wavefunction.hpp"

namespace pplus {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double length() const { return hi - lo; }
};

/// Newton-Wigner style position amplitude of a spin-0 state in the 1-D
/// reduced model:
///   phi(x) = sqrt(M / 2 pi) * int du e^{i M u x} f(u) / sqrt(2 u0)
/// The sqrt(M) factor makes the map unitary from L^2(du / 2u0) onto
/// L^2(dx), so int |phi|^2 dx equals the velocity-space norm squared.
std::vector<cplx> position_amplitudes(const SpinWavefunction& f, const QuadratureGrid& grid,
                                      const std::vector<double>& x_values, double mass_scale);

/// |phi(x)|^2 on the given x grid. Rejects 3-D grids and nonzero spin.
std::vector<std::pair<double, double>> position_density_1d(const SpinWavefunction& f,
                                                           const QuadratureGrid& grid,
                                                           const std::vector<double>& x_values,
                                                           double mass_scale);

/// Smooth compactly supported position profile exp(-1/(1-s^2)), support
/// (center - half_width, center + half_width).
struct BumpProfile {
    double center = 0.0;
    double half_width = 1.0;

    double value(double x) const;
    Interval support() const { return {center - half_width, center + half_width}; }
};

/// Velocity wavefunction whose position amplitude reproduces the profile:
/// the inverse transform f(u) = sqrt(2 u0) sqrt(M / 2 pi) int_V dx
/// e^{-i M u x} profile(x), with a fixed midpoint x-quadrature cached
/// inside the evaluation rule.
SpinWavefunction wavefunction_from_position_profile(const BumpProfile& profile, double mass_scale,
                                                    int x_samples = 2048);

}  // namespace pplus

#endif
