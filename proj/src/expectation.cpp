#include "pplus/expectation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pplus {

double enforce_real(cplx v, double scale) {
    const double bound = kImagTol * std::max(std::abs(v), scale);
    if (std::abs(v.imag()) > bound) {
        throw std::runtime_error("expectation: imaginary part above the selfadjointness guard");
    }
    return v.real();
}

ZeroReport make_zero_report(const std::vector<double>& values, double threshold) {
    ZeroReport r;
    r.threshold = threshold;
    int below = 0;
    int run = 0;
    for (double v : values) {
        if (std::abs(v) <= threshold) {
            ++below;
            ++run;
        } else if (run > 0) {
            r.run_lengths.push_back(run);
            run = 0;
        }
    }
    if (run > 0) r.run_lengths.push_back(run);
    r.below_fraction = values.empty() ? 0.0 : static_cast<double>(below) / values.size();
    r.max_run_length = r.run_lengths.empty() ? 0 : *std::max_element(r.run_lengths.begin(), r.run_lengths.end());
    return r;
}

ExpectationSeries expectation_series(const NormalizedState& state, const Observable& a,
                                     const ComplexMass& cm, const std::vector<double>& t_grid,
                                     double eps_rel) {
    for (double t : t_grid) {
        if (t < 0.0) {
            throw std::domain_error("expectation_series: semigroup domain violation, t_grid must be non-negative");
        }
    }
    ExpectationSeries s;
    s.t_grid = t_grid;
    s.values.reserve(t_grid.size());
    for (double t : t_grid) {
        const SpinWavefunction ft = evolve(state.wavefunction, cm, t);
        const cplx raw = a.expectation_raw(ft, state.grid);
        s.values.push_back(enforce_real(raw, norm_squared(ft, state.grid)));
    }
    for (double v : s.values) s.scale = std::max(s.scale, std::abs(v));
    s.zero_report = make_zero_report(s.values, eps_rel * s.scale);
    return s;
}

DichotomyVerdict dichotomy_probe(const ExpectationSeries& series, double eps_rel) {
    if (series.values.empty()) throw std::invalid_argument("dichotomy_probe: empty series");
    const ZeroReport r = make_zero_report(series.values, eps_rel * series.scale);
    if (r.below_fraction == 1.0) return DichotomyVerdict::IdenticallyZero;
    if (r.max_run_length <= 2 && r.below_fraction <= 0.05) return DichotomyVerdict::AlmostNeverZero;
    return DichotomyVerdict::Inconclusive;
}

const char* to_string(DichotomyVerdict v) {
    switch (v) {
        case DichotomyVerdict::AlmostNeverZero: return "almost_never_zero";
        case DichotomyVerdict::IdenticallyZero: return "identically_zero";
        case DichotomyVerdict::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

cplx complex_expectation(const SpinWavefunction& f, const QuadratureGrid& grid, const Observable& a,
                         const ComplexMass& cm, cplx z) {
    const AnalyticStrip strip = analytic_strip(spectral_bounds(SpectrumDescriptor::closed_form_ray(cm)));
    if (!strip.contains(z)) {
        throw std::domain_error("complex_expectation: z lies outside the closed analyticity strip");
    }
    const SpinWavefunction left = complex_time_evolve(f, cm, std::conj(z));
    const SpinWavefunction right = complex_time_evolve(f, cm, z);
    return a.form(left, right, grid);
}

double spacetime_expectation(const SpinWavefunction& f, const QuadratureGrid& grid,
                             const Observable& a, const ComplexMass& cm, const FourVector& at) {
    const SpinWavefunction uf = translate(f, cm, at, /*checked=*/false);
    const cplx raw = a.expectation_raw(uf, grid);
    return enforce_real(raw, norm_squared(uf, grid));
}

double renormalized_expectation(const SpinWavefunction& f, const QuadratureGrid& grid,
                                const Observable& a, const ComplexMass& cm, const FourVector& at) {
    const SpinWavefunction uf = translate(f, cm, at, /*checked=*/false);
    // Same code path as the numerator so that A = identity yields 1 exactly.
    const double denom = Observable::identity().expectation_raw(uf, grid).real();
    if (!(denom > 0.0)) {
        throw std::domain_error("renormalized_expectation: <U(a)f, U(a)f> vanishes on the grid");
    }
    const cplx raw = a.expectation_raw(uf, grid);
    return enforce_real(raw, denom) / denom;
}

}  // namespace pplus
