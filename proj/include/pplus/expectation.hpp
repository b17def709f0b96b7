#ifndef PPLUS_EXPECTATION_HPP
#define PPLUS_EXPECTATION_HPP

#include <vector>

#include "pplus/evolution.hpp"
#include "pplus/observable.hpp"
#include "pplus/strip.hpp"

namespace pplus {

/// Relative bound on the imaginary part of <f, A f> for selfadjoint A.
inline constexpr double kImagTol = 1e-10;

/// Re v, with the guard |Im v| <= kImagTol * max(|v|, scale). Imaginary
/// parts above the guard are an error, never silently dropped.
double enforce_real(cplx v, double scale);

struct ZeroReport {
    double threshold = 0.0;
    double below_fraction = 0.0;
    int max_run_length = 0;
    std::vector<int> run_lengths;
};

ZeroReport make_zero_report(const std::vector<double>& values, double threshold);

/// p_A(t) = <psi_t, A psi_t> sampled on a non-negative time grid.
struct ExpectationSeries {
    std::vector<double> t_grid;
    std::vector<double> values;
    double scale = 0.0;  ///< max |p_A| over the series
    ZeroReport zero_report;
};

/// Default relative threshold for the zero-set bookkeeping.
inline constexpr double kDichotomyEpsRel = 1e-9;

ExpectationSeries expectation_series(const NormalizedState& state, const Observable& a,
                                     const ComplexMass& cm, const std::vector<double>& t_grid,
                                     double eps_rel = kDichotomyEpsRel);

enum class DichotomyVerdict { AlmostNeverZero, IdenticallyZero, Inconclusive };

/// Classifies the sampled zero set of p_A:
///   IdenticallyZero   all |p| <= eps_rel * max|p|
///   AlmostNeverZero   below-threshold samples form isolated runs (length
///                     <= 2 grid steps) totalling at most 5% of the series
///   Inconclusive      anything else (e.g. a whole plateau of zeros, which
///                     would contradict the dichotomy for a valid generator)
DichotomyVerdict dichotomy_probe(const ExpectationSeries& series, double eps_rel = kDichotomyEpsRel);

const char* to_string(DichotomyVerdict v);

/// Continuation of p_A into the analyticity strip:
///   p_A(z) = <e^{-i H conj(z)} psi_0, A e^{-i H z} psi_0>.
/// Requires Re z > 0 and z inside the closed strip of the spectrum of the
/// generator; points outside are rejected.
cplx complex_expectation(const SpinWavefunction& f, const QuadratureGrid& grid, const Observable& a,
                         const ComplexMass& cm, cplx z);

/// p_A(t, x) = <U(a) f, A U(a) f> through the unchecked translation; the
/// caller records the classification of a. Real by the selfadjoint guard.
double spacetime_expectation(const SpinWavefunction& f, const QuadratureGrid& grid,
                             const Observable& a, const ComplexMass& cm, const FourVector& at);

/// <U(a)f, A U(a)f> / <U(a)f, U(a)f>; invariant under nonzero scalings of f;
/// rejects a vanishing denominator.
double renormalized_expectation(const SpinWavefunction& f, const QuadratureGrid& grid,
                                const Observable& a, const ComplexMass& cm, const FourVector& at);

}  // namespace pplus

#endif
