#ifndef PPLUS_COMPLEX_MASS_HPP
#define PPLUS_COMPLEX_MASS_HPP

#include <complex>
#include <stdexcept>

namespace pplus {

/// Pole data (M, Gamma) of a quasistable state: s_R = (M - i Gamma/2)^2.
/// Gamma = 0 is the stable-particle limit. The principal square root of
/// s_R is M - i Gamma/2 exactly (M > 0, Gamma >= 0), so no branch tracking
/// is needed anywhere downstream.
struct ComplexMass {
    double mass = 1.0;
    double width = 0.0;

    ComplexMass() = default;
    ComplexMass(double m, double gamma) : mass(m), width(gamma) {
        if (!(m > 0.0)) throw std::invalid_argument("ComplexMass: mass must be positive");
        if (gamma < 0.0) throw std::invalid_argument("ComplexMass: width must be non-negative");
    }

    std::complex<double> sqrt_s_r() const { return {mass, -0.5 * width}; }
    std::complex<double> s_r() const { return sqrt_s_r() * sqrt_s_r(); }
    bool stable() const { return width == 0.0; }
};

/// The spectrum of P0: the closed ray {(M - i Gamma/2) u0 : u0 in [1, inf)}.
struct SpectrumRay {
    ComplexMass cm;

    std::complex<double> at(double u0) const {
        if (u0 < 1.0) throw std::domain_error("SpectrumRay: u0 must be >= 1");
        return cm.sqrt_s_r() * u0;
    }
};

}  // namespace pplus

#endif
