#include "pplus/runner.hpp"

#include <chrono>
#include <cmath>

#include "pplus/sampling.hpp"
#include "pplus/selftest.hpp"
#include "pplus/version.hpp"

namespace pplus {

namespace {

struct ExperimentOutput {
    std::string csv;
    json summary;
    int exit_code = 0;
};

ExperimentOutput run_spectrum_check(const ExperimentConfig& cfg) {
    const StripBounds closed = spectral_bounds(SpectrumDescriptor::closed_form_ray(cfg.cm));
    const auto samples = sample_ray(cfg.cm, cfg.schedule.sample_count, cfg.schedule.u0_max);
    const StripBounds numeric = spectral_bounds(SpectrumDescriptor::sampled(samples));

    ExperimentOutput out;
    out.csv = spectrum_csv(samples);
    out.summary = json{{"closed_form", strip_bounds_json(closed)},
                       {"numeric", strip_bounds_json(numeric)},
                       {"k0_deviation", std::abs(closed.k0 - numeric.k0)},
                       {"k2_deviation", (closed.k2 == numeric.k2)
                                            ? 0.0
                                            : std::abs(closed.k2 - numeric.k2)}};
    if (closed.verdict != StripVerdict::Violated) {
        out.summary["half_width"] = analytic_strip(closed).half_width;
    }
    out.summary["verdict"] = to_string(closed.verdict);
    return out;
}

ExperimentOutput run_evolve(const ExperimentConfig& cfg) {
    const QuadratureGrid grid = cfg.grid.build();
    const NormalizedState state = normalize(cfg.state.build(cfg.two_j), grid);
    const double n0 = 1.0;

    std::string csv = "t,norm_squared,decay_bound\n";
    double max_violation = -1.0;
    bool monotone = true;
    double prev = n0;
    for (double t : cfg.schedule.t_values) {
        const double n2 = norm_squared(evolve(state.wavefunction, cfg.cm, t), grid);
        const double bound = std::exp(-cfg.cm.width * t) * n0;
        max_violation = std::max(max_violation, n2 - bound);
        if (n2 > prev + 1e-14) monotone = false;
        prev = n2;
        csv += format_real(t) + "," + format_real(n2) + "," + format_real(bound) + "\n";
    }

    ExperimentOutput out;
    out.csv = std::move(csv);
    out.summary = json{{"max_decay_bound_violation", max_violation},
                       {"decay_bound_satisfied", max_violation <= 1e-10},
                       {"monotone_nonincreasing", monotone},
                       {"verdict", max_violation <= 1e-10 ? "pass" : "fail"}};
    return out;
}

ExperimentOutput run_dichotomy(const ExperimentConfig& cfg) {
    const QuadratureGrid grid = cfg.grid.build();
    const NormalizedState state = normalize(cfg.state.build(cfg.two_j), grid);
    const Observable a = cfg.observable.build(cfg.cm, grid, cfg.two_j);
    const ExpectationSeries series =
        expectation_series(state, a, cfg.cm, cfg.schedule.t_values, cfg.tolerances.dichotomy_eps_rel);
    const DichotomyVerdict verdict = dichotomy_probe(series, cfg.tolerances.dichotomy_eps_rel);

    ExperimentOutput out;
    out.csv = series_csv(series);
    out.summary = json{{"verdict", to_string(verdict)},
                       {"scale", series.scale},
                       {"eps_rel", cfg.tolerances.dichotomy_eps_rel},
                       {"zero_report", zero_report_json(series.zero_report)},
                       {"observable", a.description()}};
    out.exit_code = verdict == DichotomyVerdict::Inconclusive ? 2 : 0;
    return out;
}

ExperimentOutput run_strip_diagnostics(const ExperimentConfig& cfg) {
    const QuadratureGrid grid = cfg.grid.build();
    NormalizedState state = normalize(cfg.state.build(cfg.two_j), grid);
    const Observable a = cfg.observable.build(cfg.cm, grid, cfg.two_j);
    const StripBounds bounds = spectral_bounds(SpectrumDescriptor::closed_form_ray(cfg.cm));
    const AnalyticStrip strip = analytic_strip(bounds);

    // Fixed-x probe: shift along the lightlike ray (x, x zhat); the strip
    // diagnostics then run in the shifted variable.
    SpinWavefunction psi = state.wavefunction;
    if (cfg.schedule.x_shift > 0.0) {
        const double x = cfg.schedule.x_shift;
        psi = translate(psi, cfg.cm, FourVector(x, 0.0, 0.0, x), /*checked=*/true);
    }

    auto p = [&](cplx z) { return complex_expectation(psi, grid, a, cfg.cm, z); };

    Rng rng(cfg.seed);
    std::uniform_real_distribution<double> re(cfg.schedule.re_min, cfg.schedule.re_max);
    const double y_max = (1.0 - cfg.schedule.margin) * strip.half_width;
    std::uniform_real_distribution<double> im(-y_max, y_max);

    std::string csv = "z_re,z_im,p_re,p_im,schwarz_residual\n";
    double max_schwarz = 0.0;
    for (int i = 0; i < cfg.schedule.strip_points; ++i) {
        const cplx z(re(rng), im(rng));
        const cplx val = p(z);
        const double resid = std::abs(std::conj(p(std::conj(z))) - val);
        max_schwarz = std::max(max_schwarz, resid);
        csv += format_real(z.real()) + "," + format_real(z.imag()) + "," + format_real(val.real())
               + "," + format_real(val.imag()) + "," + format_real(resid) + "\n";
    }

    // Cauchy-Riemann residual d/dconj(z) p by centered differences at a
    // mid-strip probe point; second-order for an analytic p.
    const cplx z0(0.5 * (cfg.schedule.re_min + cfg.schedule.re_max), 0.3 * strip.half_width);
    std::vector<double> residuals;
    for (double h : cfg.schedule.fd_steps) {
        const cplx dx = (p(z0 + h) - p(z0 - h)) / (2.0 * h);
        const cplx dy = (p(z0 + cplx(0.0, h)) - p(z0 - cplx(0.0, h))) / (2.0 * h);
        residuals.push_back(0.5 * std::abs(dx + cplx(0.0, 1.0) * dy));
    }
    std::vector<double> orders;
    for (std::size_t i = 0; i + 1 < residuals.size(); ++i) {
        orders.push_back(std::log(residuals[i] / residuals[i + 1])
                         / std::log(cfg.schedule.fd_steps[i] / cfg.schedule.fd_steps[i + 1]));
    }
    double min_order = orders.empty() ? 0.0 : orders[0];
    for (double o : orders) min_order = std::min(min_order, o);

    ExperimentOutput out;
    out.csv = std::move(csv);
    out.summary = json{{"half_width", strip.half_width},
                       {"x_shift", cfg.schedule.x_shift},
                       {"max_schwarz_residual", max_schwarz},
                       {"schwarz_ok", max_schwarz <= 1e-12},
                       {"cauchy_riemann",
                        {{"probe_re", z0.real()},
                         {"probe_im", z0.imag()},
                         {"steps", cfg.schedule.fd_steps},
                         {"residuals", residuals},
                         {"observed_orders", orders},
                         {"min_order", min_order}}},
                       {"verdict", (max_schwarz <= 1e-12 && min_order >= 1.8) ? "pass" : "fail"}};
    return out;
}

ExperimentOutput run_cone_scan(const ExperimentConfig& cfg, const RunOptions& opts) {
    const QuadratureGrid grid = cfg.grid.build();
    const NormalizedState state = normalize(cfg.state.build(cfg.two_j), grid);
    Observable a = Observable::identity();
    ScanQuantity quantity = ScanQuantity::NormSquared;
    if (cfg.schedule.quantity == "expectation") {
        quantity = ScanQuantity::Expectation;
        a = cfg.observable.build(cfg.cm, grid, cfg.two_j);
    } else if (cfg.schedule.quantity == "renormalized_expectation") {
        quantity = ScanQuantity::RenormalizedExpectation;
        a = cfg.observable.build(cfg.cm, grid, cfg.two_j);
    }

    std::vector<FourVector> lattice = cfg.schedule.points;
    Rng rng(cfg.seed);
    for (int i = 0; i < cfg.schedule.random_forward; ++i) {
        lattice.push_back(random_forward_vector(rng, cfg.schedule.a0_max, false));
    }
    for (int i = 0; i < cfg.schedule.lightlike; ++i) {
        lattice.push_back(random_forward_vector(rng, cfg.schedule.a0_max, true));
    }

    const ScanReport report = lattice_scan(state.wavefunction, grid, a, cfg.cm, lattice, quantity,
                                           /*checked_mode=*/true, opts.threads);

    int forward = 0, spacelike = 0, past = 0;
    double max_forward_ratio = 0.0;
    for (const ScanRow& row : report.rows) {
        switch (row.classification) {
            case IntervalClass::InForwardCone:
                ++forward;
                if (quantity == ScanQuantity::NormSquared) {
                    max_forward_ratio = std::max(max_forward_ratio,
                                                 row.value / report.reference_norm_squared);
                }
                break;
            case IntervalClass::Spacelike: ++spacelike; break;
            case IntervalClass::PastPointing: ++past; break;
        }
    }
    const bool contraction_ok = quantity != ScanQuantity::NormSquared
                                || max_forward_ratio <= 1.0 + 1e-10;

    ExperimentOutput out;
    out.csv = scan_csv(report);
    out.summary = json{{"quantity", to_string(quantity)},
                       {"points", report.rows.size()},
                       {"forward", forward},
                       {"spacelike", spacelike},
                       {"past", past},
                       {"reference_norm_squared", report.reference_norm_squared},
                       {"max_forward_ratio", max_forward_ratio},
                       {"contraction_ok", contraction_ok},
                       {"verdict", contraction_ok ? "pass" : "fail"}};
    return out;
}

ExperimentOutput run_growth_scan(const ExperimentConfig& cfg, const RunOptions& opts) {
    const QuadratureGrid grid = cfg.grid.build();
    const SpinWavefunction f = cfg.state.build(cfg.two_j);
    const NormalizedState state = normalize(f, grid);

    const ScanReport report =
        norm_growth_scan(state.wavefunction, grid, cfg.cm, cfg.schedule.direction,
                         cfg.schedule.t_fixed, cfg.schedule.x_values, cfg.schedule.alpha,
                         opts.threads);

    bool spacelike_increasing = true;
    bool forward_bounded = true;
    double prev = -1.0;
    for (const ScanRow& row : report.rows) {
        if (row.classification == IntervalClass::Spacelike) {
            if (prev >= 0.0 && row.value <= prev) spacelike_increasing = false;
            prev = row.value;
        } else if (row.classification == IntervalClass::InForwardCone) {
            if (row.value > report.reference_norm_squared * (1.0 + 1e-10)) forward_bounded = false;
        }
    }

    ExperimentOutput out;
    out.csv = scan_csv(report);
    out.summary = json{{"alpha", cfg.schedule.alpha},
                       {"reference_norm_squared", report.reference_norm_squared},
                       {"spacelike_strictly_increasing", spacelike_increasing},
                       {"forward_points_contractive", forward_bounded}};
    if (report.first_exceed_x) {
        out.summary["first_exceed_x"] = *report.first_exceed_x;
    } else {
        out.summary["first_exceed_x"] = nullptr;
    }

    bool rates_increasing = true;
    if (cfg.schedule.refinement) {
        const RefinementSpec& spec = *cfg.schedule.refinement;
        const RefinementReport ref = cutoff_growth_refinement(f, cfg.cm, spec.a, spec.u_max_values,
                                                              spec.points_per_unit, cfg.grid.mode);
        for (std::size_t i = 0; i + 1 < ref.fitted_rates.size(); ++i) {
            if (ref.fitted_rates[i + 1] <= ref.fitted_rates[i]) rates_increasing = false;
        }
        json pts = json::array();
        for (const RefinementPoint& p : ref.points) {
            pts.push_back({{"u_max", p.u_max}, {"n", p.n}, {"value", p.value}});
        }
        out.summary["refinement"] = json{{"a", {spec.a.t, spec.a.x, spec.a.y, spec.a.z}},
                                         {"classification", to_string(ref.classification)},
                                         {"points", pts},
                                         {"fitted_rates", ref.fitted_rates},
                                         {"rates_increasing", rates_increasing}};
    }
    const bool pass = spacelike_increasing && forward_bounded && rates_increasing
                      && (report.first_exceed_x.has_value() || cfg.schedule.alpha <= 0.0);
    out.summary["verdict"] = pass ? "pass" : "fail";
    return out;
}

ExperimentOutput run_tails(const ExperimentConfig& cfg) {
    const QuadratureGrid grid = cfg.grid.build();
    const TailsResult result = tails_probe(cfg.schedule.profile, cfg.cm, cfg.schedule.tails_v,
                                           cfg.schedule.t_values, grid, cfg.schedule.tails_x_samples);

    ExperimentOutput out;
    out.csv = tails_csv(result);
    out.summary = json{{"initial_outside", result.initial_outside},
                       {"noise_floor", result.noise_floor},
                       {"tails_everywhere", result.tails_everywhere},
                       {"verdict", result.tails_everywhere ? "pass" : "fail"}};
    return out;
}

ExperimentOutput run_selftest_experiment(const ExperimentConfig& cfg) {
    const auto results = run_selftest(cfg.seed, cfg.schedule.trials_scale);
    std::string csv = "suite,trials,max_deviation,tolerance,pass\n";
    bool all_pass = true;
    json suites = json::array();
    for (const SuiteResult& r : results) {
        all_pass = all_pass && r.pass;
        csv += r.name + "," + std::to_string(r.trials) + "," + format_real(r.max_deviation) + ","
               + format_real(r.tolerance) + "," + (r.pass ? "1" : "0") + "\n";
        suites.push_back({{"name", r.name},
                          {"trials", r.trials},
                          {"max_deviation", r.max_deviation},
                          {"tolerance", r.tolerance},
                          {"pass", r.pass}});
    }
    if (!all_pass) throw std::runtime_error("selftest: property suite failure");

    ExperimentOutput out;
    out.csv = std::move(csv);
    out.summary = json{{"suites", suites}, {"all_pass", all_pass}, {"verdict", "pass"}};
    return out;
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& cfg, const RunOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();

    ExperimentOutput output;
    switch (cfg.experiment) {
        case ExperimentKind::SpectrumCheck: output = run_spectrum_check(cfg); break;
        case ExperimentKind::Evolve: output = run_evolve(cfg); break;
        case ExperimentKind::Dichotomy: output = run_dichotomy(cfg); break;
        case ExperimentKind::StripDiagnostics: output = run_strip_diagnostics(cfg); break;
        case ExperimentKind::ConeScan: output = run_cone_scan(cfg, opts); break;
        case ExperimentKind::GrowthScan: output = run_growth_scan(cfg, opts); break;
        case ExperimentKind::Tails: output = run_tails(cfg); break;
        case ExperimentKind::Selftest: output = run_selftest_experiment(cfg); break;
    }

    const std::string name = experiment_name(cfg.experiment);
    std::filesystem::create_directories(opts.out_dir);

    RunResult result;
    result.exit_code = output.exit_code;
    result.csv_path = opts.out_dir / (name + ".csv");
    result.summary_path = opts.out_dir / (name + ".summary.json");
    result.manifest_path = opts.out_dir / "manifest.json";

    output.summary["experiment"] = name;
    output.summary["seed"] = cfg.seed;
    output.summary["grid"] = to_json(cfg.grid);
    output.summary["state"] = to_json(cfg.state);
    result.summary = output.summary;

    atomic_write(result.csv_path, output.csv);
    atomic_write(result.summary_path, output.summary.dump(2) + "\n");

    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const json manifest{{"version", kVersion},
                        {"experiment", name},
                        {"config", cfg.echo},
                        {"seed", cfg.seed},
                        {"threads", opts.threads},
                        {"deterministic", opts.deterministic},
                        {"wall_seconds", wall},
                        {"outputs", {result.csv_path.filename().string(),
                                     result.summary_path.filename().string()}},
                        {"verdicts", {{name, output.summary.value("verdict", "n/a")}}},
                        {"exit_code", result.exit_code}};
    atomic_write(result.manifest_path, manifest.dump(2) + "\n");
    return result;
}

}  // namespace pplus
