#include "pplus/config.hpp"

#include <cmath>
#include <random>

#include "pplus/sampling.hpp"

namespace pplus {

const std::vector<std::pair<std::string, ExperimentKind>>& experiment_names() {
    static const std::vector<std::pair<std::string, ExperimentKind>> names = {
        {"spectrum-check", ExperimentKind::SpectrumCheck},
        {"evolve", ExperimentKind::Evolve},
        {"dichotomy", ExperimentKind::Dichotomy},
        {"strip-diagnostics", ExperimentKind::StripDiagnostics},
        {"cone-scan", ExperimentKind::ConeScan},
        {"growth-scan", ExperimentKind::GrowthScan},
        {"tails", ExperimentKind::Tails},
        {"selftest", ExperimentKind::Selftest},
    };
    return names;
}

std::string experiment_name(ExperimentKind k) {
    for (const auto& [name, kind] : experiment_names()) {
        if (kind == k) return name;
    }
    return "unknown";
}

SpinWavefunction StateSpec::build(int two_j) const {
    std::vector<cplx> w = j3_weights;
    if (w.empty()) {
        w.assign(two_j + 1, cplx(0.0, 0.0));
        w[0] = 1.0;
    }
    if (family == "gaussian") return gaussian_packet(center, width, two_j, w);
    if (family == "cauchy") return cauchy_packet(center, width, power, two_j, w);
    if (family == "bump") return bump_packet(center, width, two_j, w);
    throw std::invalid_argument("StateSpec: unknown family " + family);
}

Observable ObservableSpec::build(const ComplexMass& cm, const QuadratureGrid& grid, int two_j) const {
    if (kind == "identity") return Observable::identity();
    if (kind == "zero") return Observable::zero();
    if (kind == "velocity_indicator") return Observable::velocity_indicator(u_star, outside);
    if (kind == "position_projector") return Observable::position_projector(v, cm.mass, x_samples);
    if (kind == "random_hermitian") {
        const Eigen::Index size = static_cast<Eigen::Index>(grid.size()) * (two_j + 1);
        Rng rng(matrix_seed);
        std::normal_distribution<double> dist(0.0, 1.0);
        Eigen::MatrixXcd m(size, size);
        for (Eigen::Index i = 0; i < size; ++i) {
            for (Eigen::Index j = 0; j < size; ++j) m(i, j) = cplx(dist(rng), dist(rng));
        }
        m = 0.5 * (m + m.adjoint()).eval();
        return Observable::hermitian_grid_matrix(std::move(m));
    }
    throw std::invalid_argument("ObservableSpec: unknown kind " + kind);
}

namespace {

using Errors = std::vector<std::string>;

void check_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed,
                Errors& errors) {
    for (const auto& [key, _] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || key == a;
        if (!ok) errors.push_back(path + key + ": unknown key");
    }
}

bool want_number(const json& obj, const std::string& path, const char* key, double& out, Errors& errors) {
    if (!obj.contains(key)) return false;
    if (!obj[key].is_number()) {
        errors.push_back(path + key + ": expected a number");
        return false;
    }
    out = obj[key].get<double>();
    return true;
}

bool want_int(const json& obj, const std::string& path, const char* key, int& out, Errors& errors) {
    if (!obj.contains(key)) return false;
    if (!obj[key].is_number_integer()) {
        errors.push_back(path + key + ": expected an integer");
        return false;
    }
    out = obj[key].get<int>();
    return true;
}

bool want_bool(const json& obj, const std::string& path, const char* key, bool& out, Errors& errors) {
    if (!obj.contains(key)) return false;
    if (!obj[key].is_boolean()) {
        errors.push_back(path + key + ": expected a boolean");
        return false;
    }
    out = obj[key].get<bool>();
    return true;
}

bool want_vec3(const json& obj, const std::string& path, const char* key, Vec3& out, Errors& errors) {
    if (!obj.contains(key)) return false;
    const json& v = obj[key];
    if (!v.is_array() || v.size() != 3 || !v[0].is_number() || !v[1].is_number() || !v[2].is_number()) {
        errors.push_back(path + key + ": expected an array of 3 numbers");
        return false;
    }
    out = Vec3(v[0].get<double>(), v[1].get<double>(), v[2].get<double>());
    return true;
}

bool want_number_list(const json& obj, const std::string& path, const char* key,
                      std::vector<double>& out, Errors& errors) {
    if (!obj.contains(key)) return false;
    const json& v = obj[key];
    if (!v.is_array()) {
        errors.push_back(path + key + ": expected an array of numbers");
        return false;
    }
    out.clear();
    for (const auto& e : v) {
        if (!e.is_number()) {
            errors.push_back(path + key + ": expected an array of numbers");
            return false;
        }
        out.push_back(e.get<double>());
    }
    return true;
}

void parse_complex_mass(const json& doc, ExperimentConfig& cfg, Errors& errors) {
    if (!doc.contains("complex_mass")) return;
    const json& cm = doc["complex_mass"];
    if (!cm.is_object()) {
        errors.push_back("complex_mass: expected an object");
        return;
    }
    const std::size_t before = errors.size();
    check_keys(cm, "complex_mass.", {"mass", "width"}, errors);
    double mass = 1.0, width = 0.0;
    const bool has_mass = want_number(cm, "complex_mass.", "mass", mass, errors);
    want_number(cm, "complex_mass.", "width", width, errors);
    if (!has_mass) errors.push_back("complex_mass.mass: required");
    if (mass <= 0.0) errors.push_back("complex_mass.mass: must be positive");
    if (width < 0.0) errors.push_back("complex_mass.width: must be non-negative");
    if (errors.size() == before) cfg.cm = ComplexMass(mass, width);
}

void parse_spin(const json& doc, ExperimentConfig& cfg, Errors& errors) {
    if (!doc.contains("spin")) return;
    if (!doc["spin"].is_number()) {
        errors.push_back("spin: expected a number");
        return;
    }
    const double j = doc["spin"].get<double>();
    const double two_j = 2.0 * j;
    if (two_j < 0.0 || std::abs(two_j - std::lround(two_j)) > 1e-9) {
        errors.push_back("spin: must be a non-negative half-integer");
        return;
    }
    cfg.two_j = static_cast<int>(std::lround(two_j));
}

void parse_grid(const json& doc, ExperimentConfig& cfg, Errors& errors) {
    if (!doc.contains("grid")) return;
    const json& g = doc["grid"];
    if (!g.is_object()) {
        errors.push_back("grid: expected an object");
        return;
    }
    check_keys(g, "grid.", {"mode", "u_max", "n"}, errors);
    if (g.contains("mode")) {
        if (g["mode"] == "one_d") {
            cfg.grid.mode = GridMode::OneDReduced;
        } else if (g["mode"] == "three_d") {
            cfg.grid.mode = GridMode::ThreeD;
        } else {
            errors.push_back("grid.mode: must be \"one_d\" or \"three_d\"");
        }
    }
    want_number(g, "grid.", "u_max", cfg.grid.u_max, errors);
    want_int(g, "grid.", "n", cfg.grid.n, errors);
    if (cfg.grid.u_max <= 0.0) errors.push_back("grid.u_max: must be positive");
    if (cfg.grid.n <= 0) errors.push_back("grid.n: must be positive");
}

void parse_state(const json& doc, ExperimentConfig& cfg, Errors& errors) {
    if (!doc.contains("state")) return;
    const json& s = doc["state"];
    if (!s.is_object()) {
        errors.push_back("state: expected an object");
        return;
    }
    check_keys(s, "state.", {"family", "center", "width", "power", "j3_weights"}, errors);
    if (s.contains("family")) {
        if (!s["family"].is_string()) {
            errors.push_back("state.family: expected a string");
        } else {
            cfg.state.family = s["family"].get<std::string>();
            if (cfg.state.family != "gaussian" && cfg.state.family != "cauchy"
                && cfg.state.family != "bump") {
                errors.push_back("state.family: must be one of gaussian, cauchy, bump");
            }
        }
    }
    want_vec3(s, "state.", "center", cfg.state.center, errors);
    want_number(s, "state.", "width", cfg.state.width, errors);
    want_number(s, "state.", "power", cfg.state.power, errors);
    if (cfg.state.width <= 0.0) errors.push_back("state.width: must be positive");
    if (cfg.state.power <= 0.0) errors.push_back("state.power: must be positive");
    if (s.contains("j3_weights")) {
        const json& w = s["j3_weights"];
        bool ok = w.is_array();
        std::vector<cplx> weights;
        if (ok) {
            for (const auto& e : w) {
                if (e.is_number()) {
                    weights.emplace_back(e.get<double>(), 0.0);
                } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
                    weights.emplace_back(e[0].get<double>(), e[1].get<double>());
                } else {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) {
            errors.push_back("state.j3_weights: expected an array of numbers or [re, im] pairs");
        } else if (static_cast<int>(weights.size()) != cfg.two_j + 1) {
            errors.push_back("state.j3_weights: must have 2j+1 entries");
        } else {
            cfg.state.j3_weights = std::move(weights);
        }
    }
}

void parse_observable(const json& doc, ExperimentConfig& cfg, Errors& errors) {
    if (!doc.contains("observable")) return;
    const json& o = doc["observable"];
    if (!o.is_object()) {
        errors.push_back("observable: expected an object");
        return;
    }
    check_keys(o, "observable.", {"kind", "u_star", "outside", "v", "x_samples", "matrix_seed"}, errors);
    if (o.contains("kind")) {
        if (!o["kind"].is_string()) {
            errors.push_back("observable.kind: expected a string");
        } else {
            cfg.observable.kind = o["kind"].get<std::string>();
            const bool known = cfg.observable.kind == "identity" || cfg.observable.kind == "zero"
                               || cfg.observable.kind == "velocity_indicator"
                               || cfg.observable.kind == "position_projector"
                               || cfg.observable.kind == "random_hermitian";
            if (!known) {
                errors.push_back("observable.kind: must be one of identity, zero, velocity_indicator, "
                                 "position_projector, random_hermitian");
            }
        }
    }
    want_number(o, "observable.", "u_star", cfg.observable.u_star, errors);
    want_bool(o, "observable.", "outside", cfg.observable.outside, errors);
    want_int(o, "observable.", "x_samples", cfg.observable.x_samples, errors);
    if (o.contains("matrix_seed")) {
        if (!o["matrix_seed"].is_number_unsigned() && !o["matrix_seed"].is_number_integer()) {
            errors.push_back("observable.matrix_seed: expected an integer");
        } else {
            cfg.observable.matrix_seed = o["matrix_seed"].get<std::uint64_t>();
        }
    }
    if (o.contains("v")) {
        std::vector<double> v;
        if (want_number_list(o, "observable.", "v", v, errors)) {
            if (v.size() != 2 || !(v[1] > v[0])) {
                errors.push_back("observable.v: expected [lo, hi] with lo < hi");
            } else {
                cfg.observable.v = Interval{v[0], v[1]};
            }
        }
    }
    if (cfg.observable.u_star < 0.0) errors.push_back("observable.u_star: must be non-negative");
    if (cfg.observable.x_samples <= 0) errors.push_back("observable.x_samples: must be positive");
}

std::vector<double> linspace(double lo, double hi, int count) {
    std::vector<double> out(count);
    for (int i = 0; i < count; ++i) {
        out[i] = count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
    }
    return out;
}

void parse_time_grid(const json& sch, ExperimentConfig& cfg, Errors& errors) {
    std::vector<double> tv;
    const bool explicit_list = want_number_list(sch, "schedule.", "t_values", tv, errors);
    double t_min = 0.0, t_max = 0.0;
    int count = 0;
    const bool has_min = want_number(sch, "schedule.", "t_min", t_min, errors);
    const bool has_max = want_number(sch, "schedule.", "t_max", t_max, errors);
    const bool has_count = want_int(sch, "schedule.", "count", count, errors);
    if (explicit_list) {
        if (tv.empty()) {
            errors.push_back("schedule.t_values: must not be empty");
        } else {
            cfg.schedule.t_values = tv;
        }
    } else if (has_min || has_max || has_count) {
        if (!(has_min && has_max && has_count)) {
            errors.push_back("schedule: t_min, t_max and count must be given together");
        } else if (count < 1) {
            errors.push_back("schedule.count: must be positive");
        } else {
            cfg.schedule.t_values = linspace(t_min, t_max, count);
        }
    } else {
        errors.push_back("schedule: a time grid is required (t_values or t_min/t_max/count)");
    }
}

void parse_schedule(const json& doc, ExperimentConfig& cfg, Errors& errors) {
    const bool has = doc.contains("schedule");
    const json empty = json::object();
    const json& sch = has ? doc["schedule"] : empty;
    if (has && !sch.is_object()) {
        errors.push_back("schedule: expected an object");
        return;
    }

    switch (cfg.experiment) {
        case ExperimentKind::SpectrumCheck: {
            check_keys(sch, "schedule.", {"sample_count", "u0_max"}, errors);
            want_int(sch, "schedule.", "sample_count", cfg.schedule.sample_count, errors);
            want_number(sch, "schedule.", "u0_max", cfg.schedule.u0_max, errors);
            if (cfg.schedule.sample_count < 2) errors.push_back("schedule.sample_count: must be at least 2");
            if (cfg.schedule.u0_max <= 1.0) errors.push_back("schedule.u0_max: must exceed 1");
            break;
        }
        case ExperimentKind::Evolve:
        case ExperimentKind::Dichotomy: {
            check_keys(sch, "schedule.", {"t_values", "t_min", "t_max", "count"}, errors);
            parse_time_grid(sch, cfg, errors);
            break;
        }
        case ExperimentKind::StripDiagnostics: {
            check_keys(sch, "schedule.",
                       {"strip_points", "re_min", "re_max", "margin", "fd_steps", "x_shift"}, errors);
            want_int(sch, "schedule.", "strip_points", cfg.schedule.strip_points, errors);
            want_number(sch, "schedule.", "re_min", cfg.schedule.re_min, errors);
            want_number(sch, "schedule.", "re_max", cfg.schedule.re_max, errors);
            want_number(sch, "schedule.", "margin", cfg.schedule.margin, errors);
            want_number_list(sch, "schedule.", "fd_steps", cfg.schedule.fd_steps, errors);
            want_number(sch, "schedule.", "x_shift", cfg.schedule.x_shift, errors);
            if (cfg.schedule.strip_points < 1) errors.push_back("schedule.strip_points: must be positive");
            if (!(cfg.schedule.re_min > 0.0)) errors.push_back("schedule.re_min: must be positive");
            if (!(cfg.schedule.re_max > cfg.schedule.re_min)) {
                errors.push_back("schedule.re_max: must exceed re_min");
            }
            if (cfg.schedule.margin < 0.0 || cfg.schedule.margin >= 1.0) {
                errors.push_back("schedule.margin: must lie in [0, 1)");
            }
            if (cfg.schedule.x_shift < 0.0) errors.push_back("schedule.x_shift: must be non-negative");
            break;
        }
        case ExperimentKind::ConeScan: {
            check_keys(sch, "schedule.",
                       {"points", "random_forward", "lightlike", "a0_max", "quantity"}, errors);
            if (sch.contains("points")) {
                const json& pts = sch["points"];
                bool ok = pts.is_array();
                if (ok) {
                    for (const auto& p : pts) {
                        if (!p.is_array() || p.size() != 4 || !p[0].is_number() || !p[1].is_number()
                            || !p[2].is_number() || !p[3].is_number()) {
                            ok = false;
                            break;
                        }
                        cfg.schedule.points.push_back(FourVector(p[0].get<double>(), p[1].get<double>(),
                                                                 p[2].get<double>(), p[3].get<double>()));
                    }
                }
                if (!ok) errors.push_back("schedule.points: expected an array of [t,x,y,z] quadruples");
            }
            want_int(sch, "schedule.", "random_forward", cfg.schedule.random_forward, errors);
            want_int(sch, "schedule.", "lightlike", cfg.schedule.lightlike, errors);
            want_number(sch, "schedule.", "a0_max", cfg.schedule.a0_max, errors);
            if (sch.contains("quantity")) {
                if (!sch["quantity"].is_string()) {
                    errors.push_back("schedule.quantity: expected a string");
                } else {
                    cfg.schedule.quantity = sch["quantity"].get<std::string>();
                    if (cfg.schedule.quantity != "norm_squared" && cfg.schedule.quantity != "expectation"
                        && cfg.schedule.quantity != "renormalized_expectation") {
                        errors.push_back("schedule.quantity: must be one of norm_squared, expectation, "
                                         "renormalized_expectation");
                    }
                }
            }
            if (cfg.schedule.random_forward < 0) errors.push_back("schedule.random_forward: must be non-negative");
            if (cfg.schedule.lightlike < 0) errors.push_back("schedule.lightlike: must be non-negative");
            if (cfg.schedule.a0_max <= 0.0) errors.push_back("schedule.a0_max: must be positive");
            if (cfg.schedule.points.empty() && cfg.schedule.random_forward + cfg.schedule.lightlike == 0) {
                errors.push_back("schedule: cone-scan needs points or random_forward/lightlike counts");
            }
            break;
        }
        case ExperimentKind::GrowthScan: {
            check_keys(sch, "schedule.", {"direction", "t", "x_values", "alpha", "refinement"}, errors);
            want_vec3(sch, "schedule.", "direction", cfg.schedule.direction, errors);
            want_number(sch, "schedule.", "t", cfg.schedule.t_fixed, errors);
            want_number(sch, "schedule.", "alpha", cfg.schedule.alpha, errors);
            if (!want_number_list(sch, "schedule.", "x_values", cfg.schedule.x_values, errors)
                || cfg.schedule.x_values.empty()) {
                errors.push_back("schedule.x_values: required, non-empty");
            }
            if (cfg.schedule.direction.norm() == 0.0) errors.push_back("schedule.direction: must be non-zero");
            if (cfg.schedule.alpha <= 0.0) errors.push_back("schedule.alpha: must be positive");
            if (sch.contains("refinement")) {
                const json& r = sch["refinement"];
                if (!r.is_object()) {
                    errors.push_back("schedule.refinement: expected an object");
                } else {
                    check_keys(r, "schedule.refinement.", {"a", "u_max_values", "points_per_unit"}, errors);
                    RefinementSpec spec;
                    std::vector<double> a;
                    if (want_number_list(r, "schedule.refinement.", "a", a, errors)) {
                        if (a.size() != 4) {
                            errors.push_back("schedule.refinement.a: expected [t,x,y,z]");
                        } else {
                            spec.a = FourVector(a[0], a[1], a[2], a[3]);
                        }
                    }
                    want_number_list(r, "schedule.refinement.", "u_max_values", spec.u_max_values, errors);
                    want_number(r, "schedule.refinement.", "points_per_unit", spec.points_per_unit, errors);
                    if (spec.u_max_values.size() < 2) {
                        errors.push_back("schedule.refinement.u_max_values: need at least two cutoffs");
                    }
                    if (spec.points_per_unit <= 0.0) {
                        errors.push_back("schedule.refinement.points_per_unit: must be positive");
                    }
                    cfg.schedule.refinement = spec;
                }
            }
            break;
        }
        case ExperimentKind::Tails: {
            check_keys(sch, "schedule.", {"t_values", "V", "profile", "x_samples"}, errors);
            if (!want_number_list(sch, "schedule.", "t_values", cfg.schedule.t_values, errors)
                || cfg.schedule.t_values.empty()) {
                errors.push_back("schedule.t_values: required, non-empty");
            }
            if (sch.contains("V")) {
                std::vector<double> v;
                if (want_number_list(sch, "schedule.", "V", v, errors)) {
                    if (v.size() != 2 || !(v[1] > v[0])) {
                        errors.push_back("schedule.V: expected [lo, hi] with lo < hi");
                    } else {
                        cfg.schedule.tails_v = Interval{v[0], v[1]};
                    }
                }
            }
            if (sch.contains("profile")) {
                const json& p = sch["profile"];
                if (!p.is_object()) {
                    errors.push_back("schedule.profile: expected an object");
                } else {
                    check_keys(p, "schedule.profile.", {"center", "half_width"}, errors);
                    want_number(p, "schedule.profile.", "center", cfg.schedule.profile.center, errors);
                    want_number(p, "schedule.profile.", "half_width", cfg.schedule.profile.half_width, errors);
                    if (cfg.schedule.profile.half_width <= 0.0) {
                        errors.push_back("schedule.profile.half_width: must be positive");
                    }
                }
            }
            want_int(sch, "schedule.", "x_samples", cfg.schedule.tails_x_samples, errors);
            if (cfg.schedule.tails_x_samples <= 0) errors.push_back("schedule.x_samples: must be positive");
            break;
        }
        case ExperimentKind::Selftest: {
            check_keys(sch, "schedule.", {"trials_scale"}, errors);
            want_int(sch, "schedule.", "trials_scale", cfg.schedule.trials_scale, errors);
            if (cfg.schedule.trials_scale < 1) errors.push_back("schedule.trials_scale: must be positive");
            break;
        }
    }
}

void parse_tolerances(const json& doc, ExperimentConfig& cfg, Errors& errors) {
    if (!doc.contains("tolerances")) return;
    const json& t = doc["tolerances"];
    if (!t.is_object()) {
        errors.push_back("tolerances: expected an object");
        return;
    }
    check_keys(t, "tolerances.", {"dichotomy_eps_rel"}, errors);
    want_number(t, "tolerances.", "dichotomy_eps_rel", cfg.tolerances.dichotomy_eps_rel, errors);
    if (cfg.tolerances.dichotomy_eps_rel <= 0.0) {
        errors.push_back("tolerances.dichotomy_eps_rel: must be positive");
    }
}

}  // namespace

ValidationResult validate_config(const json& doc) {
    ValidationResult result;
    Errors& errors = result.errors;

    if (!doc.is_object()) {
        errors.push_back(": top level must be a JSON object");
        return result;
    }

    ExperimentConfig cfg;
    cfg.echo = doc;

    check_keys(doc, "",
               {"experiment", "complex_mass", "spin", "grid", "state", "observable", "schedule",
                "tolerances", "seed"},
               errors);

    bool experiment_ok = false;
    if (!doc.contains("experiment")) {
        errors.push_back("experiment: required");
    } else if (!doc["experiment"].is_string()) {
        errors.push_back("experiment: expected a string");
    } else {
        const std::string name = doc["experiment"].get<std::string>();
        for (const auto& [n, kind] : experiment_names()) {
            if (n == name) {
                cfg.experiment = kind;
                experiment_ok = true;
                break;
            }
        }
        if (!experiment_ok) {
            std::string valid;
            for (const auto& [n, _] : experiment_names()) valid += (valid.empty() ? "" : ", ") + n;
            errors.push_back("experiment: unknown name \"" + name + "\"; valid names: " + valid);
        }
    }

    parse_spin(doc, cfg, errors);  // before state: j3_weights length depends on it
    parse_complex_mass(doc, cfg, errors);
    parse_grid(doc, cfg, errors);
    parse_state(doc, cfg, errors);
    parse_observable(doc, cfg, errors);
    if (experiment_ok) parse_schedule(doc, cfg, errors);
    parse_tolerances(doc, cfg, errors);

    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_integer() && !doc["seed"].is_number_unsigned()) {
            errors.push_back("seed: expected an integer");
        } else {
            cfg.seed = doc["seed"].get<std::uint64_t>();
        }
    }

    const bool needs_cm = experiment_ok && cfg.experiment != ExperimentKind::Selftest;
    if (needs_cm && !doc.contains("complex_mass")) errors.push_back("complex_mass: required");
    if (!experiment_ok) return result;

    if (cfg.experiment == ExperimentKind::Dichotomy && !doc.contains("observable")) {
        errors.push_back("observable: required for the dichotomy experiment");
    }
    if (cfg.experiment == ExperimentKind::StripDiagnostics && !doc.contains("observable")) {
        errors.push_back("observable: required for strip-diagnostics");
    }
    if (cfg.experiment == ExperimentKind::ConeScan && cfg.schedule.quantity != "norm_squared"
        && !doc.contains("observable")) {
        errors.push_back("observable: required when schedule.quantity is not norm_squared");
    }
    if ((cfg.experiment == ExperimentKind::StripDiagnostics
         || cfg.experiment == ExperimentKind::Dichotomy)
        && cfg.observable.kind == "position_projector" && cfg.grid.mode != GridMode::OneDReduced) {
        errors.push_back("observable.kind: position_projector requires grid.mode = one_d");
    }
    if (cfg.experiment == ExperimentKind::Tails && cfg.grid.mode != GridMode::OneDReduced) {
        errors.push_back("grid.mode: the tails experiment requires one_d");
    }

    if (errors.empty()) result.config = std::move(cfg);
    return result;
}

ValidationResult validate_config_text(const std::string& text) {
    json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) {
        ValidationResult r;
        r.errors.push_back(": not valid JSON");
        return r;
    }
    return validate_config(doc);
}

}  // namespace pplus
