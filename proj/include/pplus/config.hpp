#ifndef PPLUS_CONFIG_HPP
#define PPLUS_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pplus/complex_mass.hpp"
#include "pplus/position.hpp"
#include "pplus/scans.hpp"

namespace pplus {

using nlohmann::json;

enum class ExperimentKind {
    SpectrumCheck,
    Evolve,
    Dichotomy,
    StripDiagnostics,
    ConeScan,
    GrowthScan,
    Tails,
    Selftest
};

const std::vector<std::pair<std::string, ExperimentKind>>& experiment_names();
std::string experiment_name(ExperimentKind k);

struct GridSpec {
    GridMode mode = GridMode::OneDReduced;
    double u_max = 8.0;
    int n = 64;

    QuadratureGrid build() const { return QuadratureGrid::make(mode, u_max, n); }
};

struct StateSpec {
    std::string family = "gaussian";  // gaussian | cauchy | bump
    Vec3 center{0.0, 0.0, 0.0};
    double width = 1.0;
    double power = 2.0;  // cauchy tail exponent
    std::vector<cplx> j3_weights;

    SpinWavefunction build(int two_j) const;
};

struct ObservableSpec {
    std::string kind = "identity";  // identity | zero | velocity_indicator | position_projector | random_hermitian
    double u_star = 1.0;
    bool outside = true;
    Interval v{-1.0, 1.0};
    int x_samples = 801;
    std::uint64_t matrix_seed = 1;

    Observable build(const ComplexMass& cm, const QuadratureGrid& grid, int two_j) const;
};

struct RefinementSpec {
    FourVector a{0.0, 4.0, 0.0, 0.0};
    std::vector<double> u_max_values{8.0, 16.0, 32.0};
    double points_per_unit = 4.0;
};

struct ScheduleSpec {
    // time grids (evolve, dichotomy)
    std::vector<double> t_values;

    // growth-scan
    Vec3 direction{0.0, 0.0, 1.0};
    double t_fixed = 0.0;
    std::vector<double> x_values;
    double alpha = 1e6;
    std::optional<RefinementSpec> refinement;

    // cone-scan
    std::vector<FourVector> points;
    int random_forward = 0;
    int lightlike = 0;
    double a0_max = 2.0;
    std::string quantity = "norm_squared";

    // strip-diagnostics
    int strip_points = 50;
    double re_min = 0.2;
    double re_max = 2.0;
    double margin = 0.5;  ///< fraction of the half-width kept clear of the edge
    std::vector<double> fd_steps{1e-2, 5e-3, 2.5e-3};
    double x_shift = 0.0;  ///< fixed |x| for the shifted extension-domain probe

    // tails
    Interval tails_v{-1.0, 1.0};
    BumpProfile profile{0.0, 1.0};
    int tails_x_samples = 4001;

    // spectrum-check
    int sample_count = 400;
    double u0_max = 1e6;

    // selftest
    int trials_scale = 1;
};

struct Tolerances {
    double dichotomy_eps_rel = kDichotomyEpsRel;
};

struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::SpectrumCheck;
    ComplexMass cm{1.0, 0.0};
    int two_j = 0;
    GridSpec grid;
    StateSpec state;
    ObservableSpec observable;
    ScheduleSpec schedule;
    Tolerances tolerances;
    std::uint64_t seed = 1;
    json echo;  ///< the raw document, echoed into the manifest
};

/// Full-document validation: parses everything it can and aggregates every
/// schema violation (unknown keys, bad types, domain errors) with its key
/// path; no computation happens here.
struct ValidationResult {
    std::optional<ExperimentConfig> config;
    std::vector<std::string> errors;
    bool ok() const { return errors.empty(); }
};

ValidationResult validate_config(const json& doc);
ValidationResult validate_config_text(const std::string& text);

}  // namespace pplus

#endif
