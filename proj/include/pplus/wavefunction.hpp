#ifndef PPLUS_WAVEFUNCTION_HPP
#define PPLUS_WAVEFUNCTION_HPP

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "pplus/grid.hpp"
#include "pplus/lorentz.hpp"

namespace pplus {

/// Compensated (Kahan) accumulator; keeps quadrature sums order-stable.
class KahanSum {
public:
    void add(double x) {
        const double y = x - c_;
        const double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

/// Four-velocity wavefunction f(uvec, j3) with spin j. Lazily evaluable:
/// operators compose evaluation rules and grids enter only at integration
/// time, so algebraic operator laws hold pointwise to machine precision.
/// The spin projection is addressed by the doubled label two_j3 in
/// {-two_j, -two_j + 2, ..., two_j}. Evaluation must be pure and reentrant.
struct SpinWavefunction {
    int two_j = 0;
    std::function<cplx(const Vec3&, int)> eval;
    std::string description;

    int dim() const { return two_j + 1; }

    /// Doubled j3 label for component index k in [0, dim).
    int two_j3_of(int k) const { return -two_j + 2 * k; }
};

/// Inner product sum_j3 int d3u/(2u0) conj(f) g on the given grid.
/// Rejects mismatched spins.
cplx inner_product(const SpinWavefunction& f, const SpinWavefunction& g, const QuadratureGrid& grid);

double norm_squared(const SpinWavefunction& f, const QuadratureGrid& grid);

/// weights[k] * exp(-|u - center|^2 / (2 width^2)); weights indexed ascending
/// in j3 (k = 0 is j3 = -j). Width must be positive, weights not all zero.
SpinWavefunction gaussian_packet(const Vec3& center, double width, int two_j,
                                 const std::vector<cplx>& j3_weights);

/// weights[k] * (1 + |u - center|^2 / width^2)^(-power). Polynomial tails;
/// the family that leaves the domain of the translation operators at
/// spacelike a, used by the cutoff-divergence scans.
SpinWavefunction cauchy_packet(const Vec3& center, double width, double power, int two_j,
                               const std::vector<cplx>& j3_weights);

/// Smooth compactly supported profile exp(-1/(1-s^2)) on |s| < 1,
/// s = (x - center)/half_width; zero outside.
SpinWavefunction bump_packet(const Vec3& center, double half_width, int two_j,
                             const std::vector<cplx>& j3_weights);

SpinWavefunction scaled(const SpinWavefunction& f, cplx factor);

struct NormalizedState {
    SpinWavefunction wavefunction;
    QuadratureGrid grid;
    double norm_residual = 0.0;
};

/// Scales f to unit norm on the grid; rejects vanishing input norm.
NormalizedState normalize(const SpinWavefunction& f, const QuadratureGrid& grid);

}  // namespace pplus

#endif
