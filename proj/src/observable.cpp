#include "pplus/observable.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pplus {

namespace {

std::vector<double> midpoints(const Interval& v, int n) {
    std::vector<double> xs(n);
    const double dx = v.length() / n;
    for (int i = 0; i < n; ++i) xs[i] = v.lo + (i + 0.5) * dx;
    return xs;
}

}  // namespace

Observable Observable::velocity_multiplier(std::function<double(const Vec3&)> a, std::string description) {
    Observable o;
    o.kind_ = ObservableKind::VelocityMultiplier;
    o.multiplier_ = std::move(a);
    o.description_ = std::move(description);
    return o;
}

Observable Observable::identity() {
    return velocity_multiplier([](const Vec3&) { return 1.0; }, "identity");
}

Observable Observable::zero() {
    return velocity_multiplier([](const Vec3&) { return 0.0; }, "zero");
}

Observable Observable::velocity_indicator(double u_star, bool outside) {
    if (u_star < 0.0) throw std::invalid_argument("velocity_indicator: u_star must be non-negative");
    auto fn = [u_star, outside](const Vec3& u) {
        const bool out = u.norm() > u_star;
        return (out == outside) ? 1.0 : 0.0;
    };
    return velocity_multiplier(fn, std::string(outside ? "indicator(|u|>" : "indicator(|u|<")
                                       + std::to_string(u_star) + ")");
}

Observable Observable::position_projector(Interval v, double mass_scale, int x_samples) {
    if (!(v.hi > v.lo)) throw std::invalid_argument("position_projector: empty interval");
    if (mass_scale <= 0.0) throw std::invalid_argument("position_projector: mass scale must be positive");
    if (x_samples <= 0) throw std::invalid_argument("position_projector: x_samples must be positive");
    Observable o;
    o.kind_ = ObservableKind::PositionProjector1D;
    o.interval_ = v;
    o.mass_scale_ = mass_scale;
    o.x_samples_ = x_samples;
    o.description_ = "N([" + std::to_string(v.lo) + "," + std::to_string(v.hi) + "])";
    return o;
}

Observable Observable::hermitian_grid_matrix(Eigen::MatrixXcd m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_grid_matrix: matrix must be square");
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
        throw std::invalid_argument("hermitian_grid_matrix: matrix is not Hermitian to 1e-12");
    }
    Observable o;
    o.kind_ = ObservableKind::HermitianGridMatrix;
    o.matrix_ = std::make_shared<const Eigen::MatrixXcd>(std::move(m));
    o.description_ = "hermitian_grid_matrix(dim=" + std::to_string(o.matrix_->rows()) + ")";
    return o;
}

cplx Observable::form(const SpinWavefunction& g, const SpinWavefunction& h,
                      const QuadratureGrid& grid) const {
    if (g.two_j != h.two_j) throw std::invalid_argument("Observable::form: spin mismatch");
    const auto& nodes = grid.nodes();
    const auto& weights = grid.weights();

    switch (kind_) {
        case ObservableKind::VelocityMultiplier: {
            KahanSum re, im;
            for (int k = 0; k < g.dim(); ++k) {
                const int two_j3 = g.two_j3_of(k);
                for (std::size_t i = 0; i < nodes.size(); ++i) {
                    const double a = multiplier_(nodes[i]);
                    if (a == 0.0) continue;
                    const cplx term = weights[i] * a * std::conj(g.eval(nodes[i], two_j3))
                                      * h.eval(nodes[i], two_j3);
                    re.add(term.real());
                    im.add(term.imag());
                }
            }
            return {re.value(), im.value()};
        }
        case ObservableKind::PositionProjector1D: {
            const auto xs = midpoints(interval_, x_samples_);
            const auto pg = position_amplitudes(g, grid, xs, mass_scale_);
            const auto ph = position_amplitudes(h, grid, xs, mass_scale_);
            const double dx = interval_.length() / x_samples_;
            KahanSum re, im;
            for (std::size_t i = 0; i < xs.size(); ++i) {
                const cplx term = dx * std::conj(pg[i]) * ph[i];
                re.add(term.real());
                im.add(term.imag());
            }
            return {re.value(), im.value()};
        }
        case ObservableKind::HermitianGridMatrix: {
            const int dim = g.dim();
            const Eigen::Index size = static_cast<Eigen::Index>(nodes.size()) * dim;
            if (matrix_->rows() != size) {
                throw std::invalid_argument("Observable::form: grid matrix sized for a different grid/spin");
            }
            Eigen::VectorXcd vg(size), vh(size);
            for (std::size_t i = 0; i < nodes.size(); ++i) {
                const double sw = std::sqrt(weights[i]);
                for (int k = 0; k < dim; ++k) {
                    const int two_j3 = g.two_j3_of(k);
                    vg(static_cast<Eigen::Index>(i) * dim + k) = sw * g.eval(nodes[i], two_j3);
                    vh(static_cast<Eigen::Index>(i) * dim + k) = sw * h.eval(nodes[i], two_j3);
                }
            }
            return vg.dot((*matrix_) * vh);  // Eigen dot conjugates the left factor
        }
    }
    throw std::logic_error("Observable::form: unreachable");
}

SpinWavefunction Observable::apply(const SpinWavefunction& f, const QuadratureGrid& grid) const {
    switch (kind_) {
        case ObservableKind::VelocityMultiplier: {
            auto inner = f.eval;
            auto mult = multiplier_;
            return SpinWavefunction{
                f.two_j,
                [inner, mult](const Vec3& u, int two_j3) { return mult(u) * inner(u, two_j3); },
                description_ + ": " + f.description};
        }
        case ObservableKind::PositionProjector1D: {
            // (N f)(u) = sqrt(2 u0) sqrt(M/2pi) int_V dx e^{-i M u x} phi_f(x)
            const auto xs = midpoints(interval_, x_samples_);
            auto amps = std::make_shared<const std::vector<cplx>>(
                position_amplitudes(f, grid, xs, mass_scale_));
            auto xs_ptr = std::make_shared<const std::vector<double>>(xs);
            const double dx = interval_.length() / x_samples_;
            const double pref = std::sqrt(mass_scale_ / (2.0 * std::numbers::pi));
            const double m = mass_scale_;
            return SpinWavefunction{
                0,
                [amps, xs_ptr, dx, pref, m](const Vec3& u, int) -> cplx {
                    const double u0 = std::sqrt(1.0 + u.squaredNorm());
                    KahanSum re, im;
                    const double mu = m * u.z();
                    for (std::size_t i = 0; i < xs_ptr->size(); ++i) {
                        const cplx term = std::polar(1.0, -mu * (*xs_ptr)[i]) * (*amps)[i];
                        re.add(term.real());
                        im.add(term.imag());
                    }
                    return std::sqrt(2.0 * u0) * pref * dx * cplx(re.value(), im.value());
                },
                description_ + ": " + f.description};
        }
        case ObservableKind::HermitianGridMatrix:
            throw std::invalid_argument("Observable::apply: grid-matrix observables have no off-node evaluation rule");
    }
    throw std::logic_error("Observable::apply: unreachable");
}

}  // namespace pplus
