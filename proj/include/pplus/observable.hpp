#ifndef PPLUS_OBSERVABLE_HPP
#define PPLUS_OBSERVABLE_HPP

#include <functional>
#include <memory>
#include <string>

#include <Eigen/Dense>

#include "pplus/position.hpp"
#include "pplus/wavefunction.hpp"

namespace pplus {

enum class ObservableKind { VelocityMultiplier, PositionProjector1D, HermitianGridMatrix };

/// Bounded selfadjoint operator A. Three realizations:
///  - VelocityMultiplier: multiplication by a real function of u, diagonal
///    in spin (commutes with the evolution).
///  - PositionProjector1D: N(V), the Newton-Wigner projector onto the
///    interval V in the 1-D reduced model (spin 0 only).
///  - HermitianGridMatrix: explicit matrix acting on the weighted sample
///    vector psi_i = sqrt(w_i) f(node_i, j3), index i = node * dim + k.
class Observable {
public:
    static Observable velocity_multiplier(std::function<double(const Vec3&)> a, std::string description);
    static Observable identity();
    static Observable zero();
    /// Indicator of |u| > u_star (outside = true) or |u| < u_star.
    static Observable velocity_indicator(double u_star, bool outside);
    static Observable position_projector(Interval v, double mass_scale, int x_samples = 801);
    static Observable hermitian_grid_matrix(Eigen::MatrixXcd m);

    ObservableKind kind() const { return kind_; }
    const std::string& description() const { return description_; }
    const Interval& projector_interval() const { return interval_; }

    /// Sesquilinear form <g, A h> on the grid (conjugate-linear in g).
    cplx form(const SpinWavefunction& g, const SpinWavefunction& h, const QuadratureGrid& grid) const;

    /// <f, A f> as a complex number; realness guards live in the callers.
    cplx expectation_raw(const SpinWavefunction& f, const QuadratureGrid& grid) const {
        return form(f, f, grid);
    }

    /// A f as a lazily evaluable state. Supported for the multiplier and the
    /// projector; the grid-matrix realization has no off-node evaluation rule.
    SpinWavefunction apply(const SpinWavefunction& f, const QuadratureGrid& grid) const;

private:
    Observable() = default;

    ObservableKind kind_ = ObservableKind::VelocityMultiplier;
    std::string description_;
    std::function<double(const Vec3&)> multiplier_;
    Interval interval_{};
    double mass_scale_ = 1.0;
    int x_samples_ = 0;
    std::shared_ptr<const Eigen::MatrixXcd> matrix_;
};

}  // namespace pplus

#endif
