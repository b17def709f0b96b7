#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pplus/expectation.hpp"
#include "pplus/sampling.hpp"
#include "pplus/scans.hpp"

#include "oracle_helpers.hpp"

using namespace pplus;

namespace {

const ComplexMass kCm(1.0, 0.2);

NormalizedState make_state(const QuadratureGrid& grid) {
    return normalize(gaussian_packet(Vec3::Zero(), 1.0, 0, {1.0}), grid);
}

}  // namespace

TEST_CASE("spectral bounds of the closed-form ray") {
    const StripBounds b = spectral_bounds(SpectrumDescriptor::closed_form_ray(kCm));
    CHECK(b.k0 == doctest::Approx(-0.1).epsilon(1e-14));
    CHECK(b.k1_empty);
    CHECK(std::isinf(b.k1));
    CHECK(b.k2 == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(b.verdict == StripVerdict::Satisfied);
    CHECK(b.half_width() == doctest::Approx(0.1).epsilon(1e-14));
}

TEST_CASE("numeric ray sampling agrees with the closed forms") {
    for (const ComplexMass& cm : {ComplexMass(1.0, 0.2), ComplexMass(1.0, 2.0), ComplexMass(5.0, 0.5)}) {
        const auto samples = sample_ray(cm, 400, 1e6);
        const StripBounds numeric = spectral_bounds(SpectrumDescriptor::sampled(samples));
        CHECK(std::abs(numeric.k0 - (-0.5 * cm.width)) <= 1e-12);
        CHECK(std::abs(numeric.k2 - 0.5 * cm.width / cm.mass) <= 1e-12);
        CHECK(numeric.k1_empty);
    }
}

TEST_CASE("sampled-set bounds by hand evaluation") {
    const StripBounds b = spectral_bounds(SpectrumDescriptor::sampled({cplx(-1.0, -1.0)}));
    CHECK(b.k0 == doctest::Approx(-1.0));
    CHECK(b.k1 == doctest::Approx(-1.0));
    CHECK_FALSE(b.k1_empty);
    CHECK(b.k2_empty);
    CHECK(b.cond_k1_negative);
}

TEST_CASE("purely imaginary spectrum above the axis is flagged") {
    const StripBounds b = spectral_bounds(SpectrumDescriptor::sampled({cplx(0.0, 1.0)}));
    CHECK(b.k0 == doctest::Approx(1.0));
    CHECK(b.k1_empty);
    CHECK(b.k2_empty);
    CHECK(b.zero_axis_conflict);
    CHECK(b.verdict == StripVerdict::Violated);
    CHECK_THROWS_AS(analytic_strip(b), std::invalid_argument);
}

TEST_CASE("empty sampled sets are rejected") {
    CHECK_THROWS_AS(SpectrumDescriptor::sampled({}), std::invalid_argument);
}

TEST_CASE("analytic strip half-widths") {
    CHECK(analytic_strip(spectral_bounds(SpectrumDescriptor::closed_form_ray(ComplexMass(1.0, 0.2))))
              .half_width == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(analytic_strip(spectral_bounds(SpectrumDescriptor::closed_form_ray(ComplexMass(1.0, 2.0))))
              .half_width == doctest::Approx(1.0).epsilon(1e-14));

    const StripBounds stable = spectral_bounds(SpectrumDescriptor::closed_form_ray(ComplexMass(1.0, 0.0)));
    CHECK(stable.verdict == StripVerdict::Degenerate);
    CHECK(analytic_strip(stable).half_width == 0.0);
}

TEST_CASE("expectation series with the identity observable is the decaying norm") {
    const QuadratureGrid grid = QuadratureGrid::one_d(8.0, 64);
    const NormalizedState state = make_state(grid);
    std::vector<double> ts;
    for (int i = 0; i <= 40; ++i) ts.push_back(0.1 * i);
    const ExpectationSeries s = expectation_series(state, Observable::identity(), kCm, ts);
    CHECK(s.values[0] == doctest::Approx(1.0).epsilon(1e-10));
    for (std::size_t i = 0; i + 1 < s.values.size(); ++i) {
        CHECK(s.values[i + 1] < s.values[i]);  // strictly decreasing for Gamma > 0
        CHECK(std::abs(s.values[i] - norm_squared(evolve(state.wavefunction, kCm, ts[i]), grid))
              <= 1e-12);
    }
}

TEST_CASE("expectation series with A = 0 is identically zero") {
    const QuadratureGrid grid = QuadratureGrid::one_d(8.0, 64);
    const ExpectationSeries s =
        expectation_series(make_state(grid), Observable::zero(), kCm, {0.0, 0.5, 1.0});
    for (double v : s.values) CHECK(v == 0.0);
    CHECK(dichotomy_probe(s) == DichotomyVerdict::IdenticallyZero);
}

TEST_CASE("an indicator outside the state support commutes and stays zero") {
    // A multiplication operator commutes with the evolution, so
    // p_A(t) = <f, A e^{-Gamma u0 t} f> keeps the initial zero overlap.
    const QuadratureGrid grid = QuadratureGrid::one_d(8.0, 256);
    // bump packet: compact support |u| < 2, exactly zero beyond
    const NormalizedState state = normalize(bump_packet(Vec3::Zero(), 2.0, 0, {1.0}), grid);
    const Observable far_out = Observable::velocity_indicator(3.0, true);
    std::vector<double> ts{0.0, 0.3, 1.0, 5.0};
    const ExpectationSeries s = expectation_series(state, far_out, kCm, ts);
    for (double v : s.values) CHECK(v == 0.0);
    CHECK(dichotomy_probe(s) == DichotomyVerdict::IdenticallyZero);
}

TEST_CASE("expectation series rejects negative times") {
    const QuadratureGrid grid = QuadratureGrid::one_d(8.0, 32);
    CHECK_THROWS_WITH_AS(
        expectation_series(make_state(grid), Observable::identity(), kCm, {0.0, -1.0}),
        doctest::Contains("semigroup"), std::domain_error);
}

TEST_CASE("dichotomy probe on synthetic series") {
    std::vector<double> ts;
    for (int i = 0; i < 400; ++i) ts.push_back(i * 2.0 * std::numbers::pi / 399.0);

    SUBCASE("all-zero series") {
        ExpectationSeries s;
        s.t_grid = ts;
        s.values.assign(ts.size(), 0.0);
        s.scale = 0.0;
        CHECK(dichotomy_probe(s) == DichotomyVerdict::IdenticallyZero);
    }
    SUBCASE("exp(-t) cos^2(t): isolated zeros") {
        ExpectationSeries s;
        s.t_grid = ts;
        for (double t : ts) {
            const double c = std::cos(t);
            s.values.push_back(std::exp(-t) * c * c);
            s.scale = std::max(s.scale, s.values.back());
        }
        CHECK(dichotomy_probe(s) == DichotomyVerdict::AlmostNeverZero);
    }
    SUBCASE("plateau of zeros: max(0, 1-t) flags inconclusive") {
        ExpectationSeries s;
        for (int i = 0; i < 200; ++i) {
            const double t = 2.0 * i / 199.0;
            s.t_grid.push_back(t);
            s.values.push_back(std::max(0.0, 1.0 - t));
            s.scale = std::max(s.scale, s.values.back());
        }
        CHECK(dichotomy_probe(s) == DichotomyVerdict::Inconclusive);
    }
}

TEST_CASE("complex expectation matches the real series on the axis") {
    const QuadratureGrid grid = QuadratureGrid::one_d(8.0, 64);
    const NormalizedState state = make_state(grid);
    const Observable a = Observable::velocity_indicator(1.0, true);
    for (double t : {0.3, 1.0, 2.5}) {
        const cplx pz = complex_expectation(state.wavefunction, grid, a, kCm, cplx(t, 0.0));
        const ExpectationSeries s = expectation_series(state, a, kCm, {t});
        CHECK(std::abs(pz - cplx(s.values[0], 0.0)) <= 1e-12);
    }
}

TEST_CASE("complex expectation rejects points outside the strip") {
    const QuadratureGrid grid = QuadratureGrid::one_d(8.0, 32);
    const NormalizedState state = make_state(grid);
    const Observable a = Observable::identity();
    CHECK_THROWS_AS(complex_expectation(state.wavefunction, grid, a, kCm, cplx(1.0, 0.2)),
                    std::domain_error);  // |y| > Gamma/(2M) = 0.1
    CHECK_THROWS_AS(complex_expectation(state.wavefunction, grid, a, kCm, cplx(-0.5, 0.0)),
                    std::domain_error);  // Re z <= 0
    CHECK_NOTHROW(complex_expectation(state.wavefunction, grid, a, kCm, cplx(0.5, 0.1)));  // closed edge
}

TEST_CASE("Schwarz reflection identity across the strip") {
    const QuadratureGrid grid = QuadratureGrid::one_d(8.0, 64);
    const NormalizedState state = make_state(grid);
    Rng rng(31);
    std::uniform_real_distribution<double> td(0.2, 2.0);
    std::uniform_real_distribution<double> yd(-0.095, 0.095);
    for (const Observable& a : {Observable::velocity_indicator(0.8, true),
                                Observable::position_projector({-1.0, 1.0}, kCm.mass, 401)}) {
        for (int i = 0; i < 50; ++i) {
            const cplx z(td(rng), yd(rng));
            const cplx lhs = std::conj(complex_expectation(state.wavefunction, grid, a, kCm, std::conj(z)));
            const cplx rhs = complex_expectation(state.wavefunction, grid, a, kCm, z);
            CHECK(std::abs(lhs - rhs) <= 1e-12);
        }
    }
}

TEST_CASE("Cauchy-Riemann residual of the continuation converges at second order") {
    const QuadratureGrid grid = QuadratureGrid::one_d(8.0, 64);
    const NormalizedState state = make_state(grid);
    const Observable a = Observable::velocity_indicator(0.8, true);
    auto p = [&](cplx z) { return complex_expectation(state.wavefunction, grid, a, kCm, z); };

    const cplx z0(1.0, 0.03);
    std::vector<double> residuals;
    for (double h : {1e-2, 5e-3, 2.5e-3}) {
        const cplx dx = (p(z0 + h) - p(z0 - h)) / (2.0 * h);
        const cplx dy = (p(z0 + cplx(0, h)) - p(z0 - cplx(0, h))) / (2.0 * h);
        residuals.push_back(0.5 * std::abs(dx + cplx(0, 1) * dy));
    }
    const double order1 = std::log2(residuals[0] / residuals[1]);
    const double order2 = std::log2(residuals[1] / residuals[2]);
    CHECK(order1 >= 1.8);
    CHECK(order2 >= 1.8);
    CHECK(order1 <= 2.5);
    CHECK(order2 <= 2.5);
}

TEST_CASE("spacetime expectation reduces to the series on the time axis") {
    const QuadratureGrid grid = QuadratureGrid::one_d(8.0, 64);
    const NormalizedState state = make_state(grid);
    const Observable a = Observable::velocity_indicator(1.2, false);
    for (double t : {0.0, 0.7, 2.0}) {
        const double direct = spacetime_expectation(state.wavefunction, grid, a, kCm,
                                                    FourVector(t, 0, 0, 0));
        const ExpectationSeries s = expectation_series(state, a, kCm, {t});
        CHECK(std::abs(direct - s.values[0]) <= 1e-12);
    }
}

TEST_CASE("spacetime expectation on the lightlike boundary respects the contraction bound") {
    const QuadratureGrid grid = QuadratureGrid::one_d(8.0, 64);
    const NormalizedState state = make_state(grid);
    for (double t : {0.5, 1.0, 3.0}) {
        const double v = spacetime_expectation(state.wavefunction, grid, Observable::identity(), kCm,
                                               FourVector(t, 0, 0, t));
        CHECK(v <= 1.0 + 1e-10);
    }
}

TEST_CASE("norm growth scan: forward points contract, spacelike points blow up") {
    const QuadratureGrid grid = QuadratureGrid::three_d(8.0, 24);
    const NormalizedState state = make_state(grid);
    const std::vector<double> xs{0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0};
    const ScanReport report = norm_growth_scan(state.wavefunction, grid, kCm, Vec3(0, 0, 1.0), 1.0, xs);

    REQUIRE(report.rows.size() == xs.size());
    double prev_spacelike = -1.0;
    for (const ScanRow& row : report.rows) {
        if (row.classification == IntervalClass::InForwardCone) {
            CHECK(row.value <= 1.0 + 1e-10);
            CHECK_FALSE(row.checked);  // scan runs unchecked and flags it
        } else {
            CHECK(row.classification == IntervalClass::Spacelike);
            if (prev_spacelike >= 0.0) CHECK(row.value > prev_spacelike);
            prev_spacelike = row.value;
        }
    }
    REQUIRE(report.first_exceed_x.has_value());
    CHECK(*report.first_exceed_x <= 64.0);
}

TEST_CASE("growth scan at Gamma = 0 shows no blow-up") {
    const ComplexMass stable(1.0, 0.0);
    const QuadratureGrid grid = QuadratureGrid::one_d(8.0, 128);
    const NormalizedState state = make_state(grid);
    const ScanReport report = norm_growth_scan(state.wavefunction, grid, stable, Vec3(0, 0, 1.0),
                                               0.0, {1.0, 4.0, 16.0});
    for (const ScanRow& row : report.rows) {
        CHECK(row.value == doctest::Approx(1.0).epsilon(1e-12));  // unitary multiplier
    }
    CHECK_FALSE(report.first_exceed_x.has_value());
}

TEST_CASE("cutoff refinement at fixed spacelike a: heavy-tail state diverges with increasing rate") {
    const SpinWavefunction f = cauchy_packet(Vec3::Zero(), 1.0, 2.0, 0, {1.0});
    const FourVector a(0.0, 0.0, 0.0, 4.0);
    const RefinementReport report =
        cutoff_growth_refinement(f, kCm, a, {8.0, 16.0, 32.0}, 4.0);
    CHECK(report.classification == IntervalClass::Spacelike);
    REQUIRE(report.points.size() == 3);
    CHECK(report.points[1].value > report.points[0].value);
    CHECK(report.points[2].value > report.points[1].value);
    REQUIRE(report.fitted_rates.size() == 2);
    CHECK(report.fitted_rates[1] > report.fitted_rates[0]);
    CHECK(report.fitted_rates[0] > 0.0);
}

TEST_CASE("gaussian states saturate under cutoff refinement (finite continuum norm)") {
    const SpinWavefunction f = gaussian_packet(Vec3::Zero(), 1.0, 0, {1.0});
    const FourVector a(0.0, 0.0, 0.0, 4.0);
    const RefinementReport report = cutoff_growth_refinement(f, kCm, a, {8.0, 16.0, 32.0}, 4.0);
    // ||U(a)f|| is finite in the continuum: the rates flatline instead of rising
    CHECK(std::abs(report.fitted_rates[0]) <= 1e-6);
    CHECK(std::abs(report.fitted_rates[1]) <= 1e-6);
    CHECK(report.fitted_rates[1] <= report.fitted_rates[0] + 1e-9);
}

TEST_CASE("renormalized expectation is exactly one for the identity") {
    const QuadratureGrid grid = QuadratureGrid::one_d(8.0, 64);
    const NormalizedState state = make_state(grid);
    for (const FourVector& a : {FourVector(1.0, 0, 0, 0), FourVector(0.0, 0, 0, 3.0)}) {
        CHECK(renormalized_expectation(state.wavefunction, grid, Observable::identity(), kCm, a) == 1.0);
    }
}

TEST_CASE("renormalized projector expectation stays in [0, 1]") {
    const QuadratureGrid grid = QuadratureGrid::one_d(8.0, 128);
    const NormalizedState state = make_state(grid);
    const Observable proj = Observable::position_projector({-1.0, 1.0}, kCm.mass, 801);
    Rng rng(32);
    for (int i = 0; i < 10; ++i) {
        const FourVector a = random_forward_vector(rng, 2.0);
        const double v = renormalized_expectation(state.wavefunction, grid, proj, kCm, a);
        CHECK(v >= -1e-10);
        CHECK(v <= 1.0 + 1e-10);
    }
}

TEST_CASE("renormalized expectation is invariant under complex scaling") {
    const QuadratureGrid grid = QuadratureGrid::one_d(8.0, 64);
    const SpinWavefunction f = gaussian_packet(Vec3(0, 0, 0.4), 1.0, 0, {1.0});
    const Observable a = Observable::velocity_indicator(1.0, true);
    const FourVector at(0.2, 0.0, 0.0, 1.5);
    const double base = renormalized_expectation(f, grid, a, kCm, at);
    for (const cplx s : {cplx(3.0, 0.0), cplx(0.0, 2.0), cplx(-1.3, 0.7)}) {
        CHECK(std::abs(renormalized_expectation(scaled(f, s), grid, a, kCm, at) - base) <= 1e-12);
    }
}

TEST_CASE("position projector is idempotent on refined grids") {
    // On a state whose position amplitude vanishes smoothly inside V the
    // band-limit defect is negligible and <Nf, Nf> = <f, N f> to 1e-8.
    const QuadratureGrid grid = QuadratureGrid::one_d(100.0, 4000);
    const SpinWavefunction f = wavefunction_from_position_profile(BumpProfile{0.0, 1.0}, kCm.mass);
    const NormalizedState state = normalize(f, grid);
    const Observable proj = Observable::position_projector({-1.2, 1.2}, kCm.mass, 2001);
    const SpinWavefunction nf = proj.apply(state.wavefunction, grid);
    const double pf = proj.expectation_raw(state.wavefunction, grid).real();   // <f, N f>
    const double nn = inner_product(nf, nf, grid).real();                      // <Nf, Nf>
    CHECK(std::abs(nn - pf) <= 1e-8);
    CHECK(pf == doctest::Approx(1.0).epsilon(1e-7));  // N acts as identity on states inside V
}

TEST_CASE("projector idempotency defect on edge-supported states shrinks with the cutoff") {
    // A state with nonzero amplitude at the edge of V has a Gibbs-type
    // band-limit defect decaying only with u_max; the trend is monotone.
    const NormalizedState coarse = make_state(QuadratureGrid::one_d(10.0, 512));
    const NormalizedState fine = make_state(QuadratureGrid::one_d(40.0, 2048));
    const Observable proj = Observable::position_projector({-1.0, 1.0}, kCm.mass, 2001);
    auto defect = [&](const NormalizedState& s) {
        const SpinWavefunction nf = proj.apply(s.wavefunction, s.grid);
        return std::abs(inner_product(nf, nf, s.grid).real()
                        - proj.expectation_raw(s.wavefunction, s.grid).real());
    };
    const double d_coarse = defect(coarse);
    const double d_fine = defect(fine);
    CHECK(d_fine < d_coarse);
}

TEST_CASE("hermitian grid matrix observables validate and evaluate") {
    const QuadratureGrid grid = QuadratureGrid::one_d(6.0, 8);
    Eigen::MatrixXcd m(8, 8);
    Rng rng(33);
    std::normal_distribution<double> nd(0.0, 1.0);
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) m(i, j) = cplx(nd(rng), nd(rng));
    }
    CHECK_THROWS_AS(Observable::hermitian_grid_matrix(m), std::invalid_argument);

    const Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
    const Observable a = Observable::hermitian_grid_matrix(h);
    const SpinWavefunction f = gaussian_packet(Vec3::Zero(), 1.0, 0, {1.0});
    const cplx v = a.expectation_raw(f, grid);
    CHECK(std::abs(v.imag()) <= 1e-12 * std::max(1.0, std::abs(v)));

    // sized for a different grid
    const QuadratureGrid other = QuadratureGrid::one_d(6.0, 16);
    CHECK_THROWS_AS(a.expectation_raw(f, other), std::invalid_argument);
}

TEST_CASE("velocity multipliers must be real-valued by construction") {
    // the type admits only real-valued functions; selfadjointness is structural
    const Observable a = Observable::velocity_multiplier(
        [](const Vec3& u) { return u.z() * u.z(); }, "uz^2");
    const QuadratureGrid grid = QuadratureGrid::one_d(8.0, 64);
    const SpinWavefunction f = gaussian_packet(Vec3(0, 0, 0.3), 1.0, 0, {cplx(1.0, 0.8)});
    const cplx v = a.expectation_raw(f, grid);
    CHECK(std::abs(v.imag()) <= 1e-14);
}

TEST_CASE("tails probe: immediate leakage out of the localization interval") {
    const BumpProfile profile{0.0, 1.0};
    const Interval v{-1.0, 1.0};
    const QuadratureGrid grid = QuadratureGrid::one_d(100.0, 4000);
    const TailsResult result = tails_probe(profile, kCm, v, {0.0, 0.01, 0.05, 0.1}, grid, 2001);

    CHECK(std::abs(result.initial_outside) <= 1e-8);
    CHECK(result.outside_probability[0] <= 1e-8);
    for (std::size_t i = 1; i < result.t_values.size(); ++i) {
        CHECK(result.outside_probability[i] > 1e-7);
    }
    CHECK(result.tails_everywhere);
}

TEST_CASE("tails probe rejects negative times with the semigroup error") {
    const QuadratureGrid grid = QuadratureGrid::one_d(50.0, 500);
    CHECK_THROWS_WITH_AS(tails_probe(BumpProfile{0.0, 1.0}, kCm, {-1.0, 1.0}, {-0.1}, grid),
                         doctest::Contains("semigroup"), std::domain_error);
}

TEST_CASE("tails probe rejects profiles not supported inside V") {
    const QuadratureGrid grid = QuadratureGrid::one_d(50.0, 500);
    CHECK_THROWS_AS(tails_probe(BumpProfile{0.0, 2.0}, kCm, {-1.0, 1.0}, {0.1}, grid),
                    std::invalid_argument);
}
