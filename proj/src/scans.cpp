#include "pplus/scans.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

namespace pplus {

const char* to_string(ScanQuantity q) {
    switch (q) {
        case ScanQuantity::NormSquared: return "norm_squared";
        case ScanQuantity::Expectation: return "expectation";
        case ScanQuantity::RenormalizedExpectation: return "renormalized_expectation";
    }
    return "unknown";
}

namespace {

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body) {
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    const int nt = std::min<std::size_t>(threads, count);
    std::vector<std::thread> pool;
    pool.reserve(nt);
    std::atomic<std::size_t> next{0};
    for (int t = 0; t < nt; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

ScanReport lattice_scan(const SpinWavefunction& f, const QuadratureGrid& grid, const Observable& a,
                        const ComplexMass& cm, const std::vector<FourVector>& lattice,
                        ScanQuantity quantity, bool checked_mode, int threads) {
    ScanReport report;
    report.quantity = quantity;
    report.checked_mode = checked_mode;
    report.reference_norm_squared = norm_squared(f, grid);
    report.rows.resize(lattice.size());

    parallel_for(lattice.size(), threads, [&](std::size_t i) {
        const FourVector& at = lattice[i];
        ScanRow row;
        row.a = at;
        row.classification = classify_interval(at);
        row.checked = checked_mode && row.classification == IntervalClass::InForwardCone;
        const SpinWavefunction uf = translate(f, cm, at, row.checked);
        switch (quantity) {
            case ScanQuantity::NormSquared:
                row.value = norm_squared(uf, grid);
                break;
            case ScanQuantity::Expectation:
                row.value = enforce_real(a.expectation_raw(uf, grid), norm_squared(uf, grid));
                break;
            case ScanQuantity::RenormalizedExpectation:
                row.value = renormalized_expectation(f, grid, a, cm, at);
                break;
        }
        report.rows[i] = row;
    });
    return report;
}

ScanReport norm_growth_scan(const SpinWavefunction& f, const QuadratureGrid& grid,
                            const ComplexMass& cm, const Vec3& direction, double t,
                            const std::vector<double>& x_values, double alpha, int threads) {
    const double dn = direction.norm();
    if (dn == 0.0) throw std::invalid_argument("norm_growth_scan: zero direction");
    const Vec3 dir = direction / dn;

    std::vector<FourVector> lattice;
    lattice.reserve(x_values.size());
    for (double x : x_values) lattice.push_back(FourVector(t, x * dir));

    ScanReport report = lattice_scan(f, grid, Observable::identity(), cm, lattice,
                                     ScanQuantity::NormSquared, /*checked_mode=*/false, threads);
    report.growth_alpha = alpha;
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        if (report.rows[i].value > alpha * report.reference_norm_squared) {
            report.first_exceed_x = x_values[i];
            break;
        }
    }
    return report;
}

RefinementReport cutoff_growth_refinement(const SpinWavefunction& f, const ComplexMass& cm,
                                          const FourVector& a, const std::vector<double>& u_max_values,
                                          double points_per_unit, GridMode mode) {
    if (u_max_values.size() < 2) {
        throw std::invalid_argument("cutoff_growth_refinement: need at least two cutoffs");
    }
    RefinementReport report;
    report.a = a;
    report.classification = classify_interval(a);
    for (double u_max : u_max_values) {
        const int n = std::max(2, static_cast<int>(std::lround(2.0 * u_max * points_per_unit)));
        const QuadratureGrid grid = QuadratureGrid::make(mode, u_max, n);
        const double ref = norm_squared(f, grid);
        const SpinWavefunction uf = translate(f, cm, a, /*checked=*/false);
        report.points.push_back({u_max, n, norm_squared(uf, grid) / ref});
    }
    for (std::size_t i = 0; i + 1 < report.points.size(); ++i) {
        const auto& p0 = report.points[i];
        const auto& p1 = report.points[i + 1];
        report.fitted_rates.push_back((std::log(p1.value) - std::log(p0.value)) / (p1.u_max - p0.u_max));
    }
    return report;
}

TailsResult tails_probe(const BumpProfile& f0, const ComplexMass& cm, const Interval& v,
                        const std::vector<double>& t_values, const QuadratureGrid& grid,
                        int x_samples) {
    for (double t : t_values) {
        if (t < 0.0) {
            throw std::domain_error("tails_probe: semigroup domain violation, sample times must be non-negative");
        }
    }
    if (grid.mode() != GridMode::OneDReduced) {
        throw std::invalid_argument("tails_probe: requires the 1-D reduced model");
    }
    const Interval supp = f0.support();
    if (supp.lo < v.lo || supp.hi > v.hi) {
        throw std::invalid_argument("tails_probe: initial profile is not supported inside V");
    }

    const SpinWavefunction raw = wavefunction_from_position_profile(f0, cm.mass);
    const NormalizedState state = normalize(raw, grid);

    std::vector<double> xs(x_samples);
    const double dx = v.length() / x_samples;
    for (int i = 0; i < x_samples; ++i) xs[i] = v.lo + (i + 0.5) * dx;

    auto outside_mass = [&](const SpinWavefunction& g) {
        const double total = norm_squared(g, grid);
        const auto amps = position_amplitudes(g, grid, xs, cm.mass);
        KahanSum inside;
        for (const cplx& amp : amps) inside.add(dx * std::norm(amp));
        return total - inside.value();
    };

    TailsResult result;
    result.noise_floor = kTailsNoiseFloor;
    result.initial_outside = outside_mass(state.wavefunction);
    if (std::abs(result.initial_outside) > kTailsInitialTol) {
        throw std::invalid_argument("tails_probe: initial state is not localized in V to 1e-8");
    }

    result.t_values = t_values;
    result.tails_everywhere = true;
    for (double t : t_values) {
        const double out = outside_mass(evolve(state.wavefunction, cm, t));
        result.outside_probability.push_back(out);
        if (t > 0.0 && out <= kTailsNoiseFloor) result.tails_everywhere = false;
    }
    return result;
}

}  // namespace pplus
