#include "pplus/wavefunction.hpp"

#include <cmath>
#include <stdexcept>

namespace pplus {

namespace {

std::vector<cplx> checked_weights(int two_j, const std::vector<cplx>& w) {
    if (two_j < 0) throw std::invalid_argument("packet: negative spin");
    if (static_cast<int>(w.size()) != two_j + 1) {
        throw std::invalid_argument("packet: j3_weights must have 2j+1 entries");
    }
    bool any = false;
    for (const auto& c : w) any = any || (c != cplx(0.0, 0.0));
    if (!any) throw std::invalid_argument("packet: j3_weights must not all vanish");
    return w;
}

int weight_index(int two_j, int two_j3) { return (two_j3 + two_j) / 2; }

}  // namespace

cplx inner_product(const SpinWavefunction& f, const SpinWavefunction& g, const QuadratureGrid& grid) {
    if (f.two_j != g.two_j) {
        throw std::invalid_argument("inner_product: spin mismatch between states");
    }
    KahanSum re, im;
    const auto& nodes = grid.nodes();
    const auto& weights = grid.weights();
    for (int k = 0; k < f.dim(); ++k) {
        const int two_j3 = f.two_j3_of(k);
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const cplx term = weights[i] * std::conj(f.eval(nodes[i], two_j3)) * g.eval(nodes[i], two_j3);
            re.add(term.real());
            im.add(term.imag());
        }
    }
    return {re.value(), im.value()};
}

double norm_squared(const SpinWavefunction& f, const QuadratureGrid& grid) {
    KahanSum s;
    const auto& nodes = grid.nodes();
    const auto& weights = grid.weights();
    for (int k = 0; k < f.dim(); ++k) {
        const int two_j3 = f.two_j3_of(k);
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            s.add(weights[i] * std::norm(f.eval(nodes[i], two_j3)));
        }
    }
    return s.value();
}

SpinWavefunction gaussian_packet(const Vec3& center, double width, int two_j,
                                 const std::vector<cplx>& j3_weights) {
    if (width <= 0.0) throw std::invalid_argument("gaussian_packet: width must be positive");
    auto w = checked_weights(two_j, j3_weights);
    const double inv2w2 = 1.0 / (2.0 * width * width);
    return SpinWavefunction{
        two_j,
        [center, inv2w2, two_j, w](const Vec3& u, int two_j3) -> cplx {
            return w[weight_index(two_j, two_j3)] * std::exp(-(u - center).squaredNorm() * inv2w2);
        },
        "gaussian(center=(" + std::to_string(center.x()) + "," + std::to_string(center.y()) + ","
            + std::to_string(center.z()) + "),width=" + std::to_string(width) + ")"};
}

SpinWavefunction cauchy_packet(const Vec3& center, double width, double power, int two_j,
                               const std::vector<cplx>& j3_weights) {
    if (width <= 0.0) throw std::invalid_argument("cauchy_packet: width must be positive");
    if (power <= 0.0) throw std::invalid_argument("cauchy_packet: power must be positive");
    auto w = checked_weights(two_j, j3_weights);
    const double inv_w2 = 1.0 / (width * width);
    return SpinWavefunction{
        two_j,
        [center, inv_w2, power, two_j, w](const Vec3& u, int two_j3) -> cplx {
            return w[weight_index(two_j, two_j3)]
                   * std::pow(1.0 + (u - center).squaredNorm() * inv_w2, -power);
        },
        "cauchy(width=" + std::to_string(width) + ",power=" + std::to_string(power) + ")"};
}

SpinWavefunction bump_packet(const Vec3& center, double half_width, int two_j,
                             const std::vector<cplx>& j3_weights) {
    if (half_width <= 0.0) throw std::invalid_argument("bump_packet: half_width must be positive");
    auto w = checked_weights(two_j, j3_weights);
    return SpinWavefunction{
        two_j,
        [center, half_width, two_j, w](const Vec3& u, int two_j3) -> cplx {
            const double s2 = (u - center).squaredNorm() / (half_width * half_width);
            if (s2 >= 1.0) return {0.0, 0.0};
            return w[weight_index(two_j, two_j3)] * std::exp(-1.0 / (1.0 - s2));
        },
        "bump(half_width=" + std::to_string(half_width) + ")"};
}

SpinWavefunction scaled(const SpinWavefunction& f, cplx factor) {
    auto inner = f.eval;
    return SpinWavefunction{
        f.two_j,
        [inner, factor](const Vec3& u, int two_j3) { return factor * inner(u, two_j3); },
        "scaled: " + f.description};
}

NormalizedState normalize(const SpinWavefunction& f, const QuadratureGrid& grid) {
    const double n2 = norm_squared(f, grid);
    if (!(n2 > 0.0)) throw std::invalid_argument("normalize: state has vanishing norm on the grid");
    SpinWavefunction unit = scaled(f, cplx(1.0 / std::sqrt(n2), 0.0));
    unit.description = "normalized: " + f.description;
    const double residual = std::abs(norm_squared(unit, grid) - 1.0);
    if (residual > 1e-8) throw std::runtime_error("normalize: residual above 1e-8");
    return NormalizedState{std::move(unit), grid, residual};
}

}  // namespace pplus
