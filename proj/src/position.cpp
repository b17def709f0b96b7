#include "pplus/position.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

namespace pplus {

std::vector<cplx> position_amplitudes(const SpinWavefunction& f, const QuadratureGrid& grid,
                                      const std::vector<double>& x_values, double mass_scale) {
    if (grid.mode() != GridMode::OneDReduced) {
        throw std::invalid_argument("position_amplitudes: requires a OneDReduced grid (3-D localization is out of scope)");
    }
    if (f.two_j != 0) {
        throw std::invalid_argument("position_amplitudes: requires spin 0");
    }
    if (mass_scale <= 0.0) throw std::invalid_argument("position_amplitudes: mass scale must be positive");

    const auto& nodes = grid.nodes();
    const auto& weights = grid.weights();
    const std::size_t n = nodes.size();

    // Pre-sample f once; the grid weights already carry 1/(2u0), so the
    // 1/sqrt(2u0) amplitude enters as w_i * sqrt(2 u0_i) * f_i.
    std::vector<cplx> samples(n);
    std::vector<double> uz(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u0 = std::sqrt(1.0 + nodes[i].squaredNorm());
        samples[i] = weights[i] * std::sqrt(2.0 * u0) * f.eval(nodes[i], 0);
        uz[i] = nodes[i].z();
    }

    const double pref = std::sqrt(mass_scale / (2.0 * std::numbers::pi));
    std::vector<cplx> out(x_values.size());
    for (std::size_t k = 0; k < x_values.size(); ++k) {
        KahanSum re, im;
        const double mx = mass_scale * x_values[k];
        for (std::size_t i = 0; i < n; ++i) {
            const cplx term = std::polar(1.0, mx * uz[i]) * samples[i];
            re.add(term.real());
            im.add(term.imag());
        }
        out[k] = pref * cplx(re.value(), im.value());
    }
    return out;
}

std::vector<std::pair<double, double>> position_density_1d(const SpinWavefunction& f,
                                                           const QuadratureGrid& grid,
                                                           const std::vector<double>& x_values,
                                                           double mass_scale) {
    const auto amps = position_amplitudes(f, grid, x_values, mass_scale);
    std::vector<std::pair<double, double>> out(x_values.size());
    for (std::size_t k = 0; k < x_values.size(); ++k) {
        out[k] = {x_values[k], std::norm(amps[k])};
    }
    return out;
}

double BumpProfile::value(double x) const {
    const double s = (x - center) / half_width;
    const double s2 = s * s;
    if (s2 >= 1.0) return 0.0;
    return std::exp(-1.0 / (1.0 - s2));
}

SpinWavefunction wavefunction_from_position_profile(const BumpProfile& profile, double mass_scale,
                                                    int x_samples) {
    if (mass_scale <= 0.0) throw std::invalid_argument("profile transform: mass scale must be positive");
    if (x_samples <= 0) throw std::invalid_argument("profile transform: x_samples must be positive");

    struct Table {
        std::vector<double> x;
        std::vector<double> wphi;  // dx * profile(x)
    };
    auto table = std::make_shared<Table>();
    const Interval supp = profile.support();
    const double dx = supp.length() / x_samples;
    table->x.resize(x_samples);
    table->wphi.resize(x_samples);
    for (int i = 0; i < x_samples; ++i) {
        const double x = supp.lo + (i + 0.5) * dx;
        table->x[i] = x;
        table->wphi[i] = dx * profile.value(x);
    }

    const double pref = std::sqrt(mass_scale / (2.0 * std::numbers::pi));
    return SpinWavefunction{
        0,
        [table, pref, mass_scale](const Vec3& u, int) -> cplx {
            const double u0 = std::sqrt(1.0 + u.squaredNorm());
            KahanSum re, im;
            const double mu = mass_scale * u.z();
            for (std::size_t i = 0; i < table->x.size(); ++i) {
                const cplx term = std::polar(table->wphi[i], -mu * table->x[i]);
                re.add(term.real());
                im.add(term.imag());
            }
            return std::sqrt(2.0 * u0) * pref * cplx(re.value(), im.value());
        },
        "bump_profile(center=" + std::to_string(profile.center)
            + ",half_width=" + std::to_string(profile.half_width) + ")"};
}

}  // namespace pplus
