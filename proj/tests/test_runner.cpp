#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "pplus/runner.hpp"
#include "pplus/selftest.hpp"

using namespace pplus;
namespace fs = std::filesystem;

namespace {

json minimal_dichotomy() {
    return json{{"experiment", "dichotomy"},
                {"complex_mass", {{"mass", 1.0}, {"width", 0.2}}},
                {"grid", {{"mode", "one_d"}, {"u_max", 8.0}, {"n", 32}}},
                {"state", {{"family", "gaussian"}, {"width", 1.0}}},
                {"observable", {{"kind", "zero"}}},
                {"schedule", {{"t_min", 0.0}, {"t_max", 1.0}, {"count", 20}}},
                {"seed", 7}};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), {});
}

struct TempDir {
    fs::path path;
    TempDir(const std::string& tag) : path(fs::temp_directory_path() / ("pplus_test_" + tag)) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("minimal valid config parses") {
    const ValidationResult r = validate_config(minimal_dichotomy());
    CHECK(r.ok());
    REQUIRE(r.config.has_value());
    CHECK(r.config->experiment == ExperimentKind::Dichotomy);
    CHECK(r.config->cm.width == doctest::Approx(0.2));
    CHECK(r.config->schedule.t_values.size() == 20);
}

TEST_CASE("negative width is reported against complex_mass.width") {
    json doc = minimal_dichotomy();
    doc["complex_mass"]["width"] = -0.5;
    const ValidationResult r = validate_config(doc);
    CHECK_FALSE(r.ok());
    bool found = false;
    for (const auto& e : r.errors) found = found || e.find("complex_mass.width") != std::string::npos;
    CHECK(found);
}

TEST_CASE("unknown experiment lists the valid names") {
    json doc = minimal_dichotomy();
    doc["experiment"] = "frobnicate";
    const ValidationResult r = validate_config(doc);
    REQUIRE_FALSE(r.ok());
    bool found = false;
    for (const auto& e : r.errors) {
        found = found || (e.find("unknown name") != std::string::npos
                          && e.find("spectrum-check") != std::string::npos
                          && e.find("tails") != std::string::npos);
    }
    CHECK(found);
}

TEST_CASE("unknown keys are rejected (strict schema)") {
    json doc = minimal_dichotomy();
    doc["grid"]["umax"] = 4.0;  // typo
    doc["extra"] = 1;
    const ValidationResult r = validate_config(doc);
    REQUIRE_FALSE(r.ok());
    CHECK(r.errors.size() >= 2);
    bool typo = false, extra = false;
    for (const auto& e : r.errors) {
        typo = typo || e.find("grid.umax") != std::string::npos;
        extra = extra || e.find("extra") != std::string::npos;
    }
    CHECK(typo);
    CHECK(extra);
}

TEST_CASE("validation aggregates several errors at once") {
    json doc = minimal_dichotomy();
    doc["complex_mass"]["width"] = -1.0;
    doc["grid"]["n"] = 0;
    doc["spin"] = 0.3;
    const ValidationResult r = validate_config(doc);
    CHECK(r.errors.size() >= 3);
}

TEST_CASE("validation has no side effects on disk") {
    TempDir tmp("validate");
    const fs::path probe = tmp.path / "before";
    fs::create_directories(probe);
    validate_config(minimal_dichotomy());
    std::size_t entries = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(tmp.path)) ++entries;
    CHECK(entries == 1);
}

TEST_CASE("spectrum-check writes k2 into the summary") {
    TempDir tmp("spectrum");
    json doc{{"experiment", "spectrum-check"},
             {"complex_mass", {{"mass", 1.0}, {"width", 0.2}}}};
    const ValidationResult r = validate_config(doc);
    REQUIRE(r.ok());
    const RunResult result = run_experiment(*r.config, {tmp.path, 1, false});
    CHECK(result.exit_code == 0);

    const json summary = json::parse(slurp(result.summary_path));
    CHECK(summary["closed_form"]["k2"].get<double>() == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(summary["closed_form"]["k1"].get<std::string>() == "-inf (empty set)");
    CHECK(summary["half_width"].get<double>() == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(fs::exists(result.csv_path));
    CHECK(fs::exists(result.manifest_path));

    const json manifest = json::parse(slurp(result.manifest_path));
    CHECK(manifest["config"] == doc);
    CHECK(manifest["exit_code"] == 0);
}

TEST_CASE("dichotomy with A = 0 verdicts identically zero with exit 0") {
    TempDir tmp("zero");
    const ValidationResult r = validate_config(minimal_dichotomy());
    REQUIRE(r.ok());
    const RunResult result = run_experiment(*r.config, {tmp.path, 1, false});
    CHECK(result.exit_code == 0);
    const json summary = json::parse(slurp(result.summary_path));
    CHECK(summary["verdict"] == "identically_zero");
}

TEST_CASE("dichotomy on a physical run verdicts almost never zero") {
    TempDir tmp("physical");
    json doc = minimal_dichotomy();
    doc["observable"] = {{"kind", "velocity_indicator"}, {"u_star", 1.0}, {"outside", true}};
    doc["schedule"] = {{"t_min", 0.0}, {"t_max", 20.0}, {"count", 200}};
    const ValidationResult r = validate_config(doc);
    REQUIRE(r.ok());
    const RunResult result = run_experiment(*r.config, {tmp.path, 1, false});
    CHECK(result.exit_code == 0);
    const json summary = json::parse(slurp(result.summary_path));
    CHECK(summary["verdict"] == "almost_never_zero");
}

TEST_CASE("an inconclusive dichotomy exits with code 2") {
    TempDir tmp("inconclusive");
    json doc = minimal_dichotomy();
    // indicator with support the state only reaches after a while... instead:
    // a projector-free trick: outside indicator far beyond the grid keeps
    // every value at exactly zero EXCEPT the first row when the state peeks
    // out; simplest honest route: a series with a genuine zero plateau is
    // produced by an observable whose overlap dies within the sampled window.
    doc["observable"] = {{"kind", "velocity_indicator"}, {"u_star", 6.0}, {"outside", true}};
    doc["grid"] = {{"mode", "one_d"}, {"u_max", 8.0}, {"n", 512}};
    doc["state"] = {{"family", "gaussian"}, {"width", 1.0}};
    doc["schedule"] = {{"t_min", 0.0}, {"t_max", 400.0}, {"count", 50}};
    const ValidationResult r = validate_config(doc);
    REQUIRE(r.ok());
    const RunResult result = run_experiment(*r.config, {tmp.path, 1, false});
    const json summary = json::parse(slurp(result.summary_path));
    CHECK(summary["verdict"] == "inconclusive");
    CHECK(result.exit_code == 2);
}

TEST_CASE("evolve with a negative time exits through the semigroup error") {
    TempDir tmp("negative");
    json doc{{"experiment", "evolve"},
             {"complex_mass", {{"mass", 1.0}, {"width", 0.2}}},
             {"grid", {{"mode", "one_d"}, {"u_max", 8.0}, {"n", 32}}},
             {"state", {{"family", "gaussian"}}},
             {"schedule", {{"t_values", {0.0, -1.0}}}}};
    const ValidationResult r = validate_config(doc);
    REQUIRE(r.ok());  // schema-valid; the violation is a domain precondition
    CHECK_THROWS_WITH_AS(run_experiment(*r.config, {tmp.path, 1, false}),
                         doctest::Contains("semigroup"), std::domain_error);
}

TEST_CASE("identical config and seed reproduce byte-identical CSV") {
    json doc = minimal_dichotomy();
    doc["observable"] = {{"kind", "velocity_indicator"}, {"u_star", 1.0}, {"outside", true}};

    TempDir tmp1("det1");
    TempDir tmp2("det2");
    const ValidationResult r = validate_config(doc);
    REQUIRE(r.ok());
    const RunResult r1 = run_experiment(*r.config, {tmp1.path, 1, true});
    const RunResult r2 = run_experiment(*r.config, {tmp2.path, 2, true});
    CHECK(slurp(r1.csv_path) == slurp(r2.csv_path));
    CHECK(slurp(r1.summary_path) == slurp(r2.summary_path));
}

TEST_CASE("growth scan rows carry classification and checked flags") {
    TempDir tmp("growth");
    json doc{{"experiment", "growth-scan"},
             {"complex_mass", {{"mass", 1.0}, {"width", 0.2}}},
             {"grid", {{"mode", "one_d"}, {"u_max", 8.0}, {"n", 64}}},
             {"state", {{"family", "gaussian"}}},
             {"schedule", {{"direction", {0.0, 0.0, 1.0}}, {"t", 1.0},
                           {"x_values", {0.5, 2.0, 8.0, 32.0, 128.0}}, {"alpha", 1e6}}}};
    const ValidationResult r = validate_config(doc);
    REQUIRE(r.ok());
    const RunResult result = run_experiment(*r.config, {tmp.path, 1, false});
    CHECK(result.exit_code == 0);

    const std::string csv = slurp(result.csv_path);
    CHECK(csv.find("a_t,a_x,a_y,a_z,classification,checked,quantity,value") == 0);
    CHECK(csv.find("forward") != std::string::npos);
    CHECK(csv.find("spacelike") != std::string::npos);
    const json summary = json::parse(slurp(result.summary_path));
    CHECK(summary["spacelike_strictly_increasing"] == true);
    CHECK(summary["forward_points_contractive"] == true);
    CHECK_FALSE(summary["first_exceed_x"].is_null());
}

TEST_CASE("cone scan respects the contraction bound") {
    TempDir tmp("cone");
    json doc{{"experiment", "cone-scan"},
             {"complex_mass", {{"mass", 1.0}, {"width", 0.2}}},
             {"grid", {{"mode", "one_d"}, {"u_max", 8.0}, {"n", 64}}},
             {"state", {{"family", "gaussian"}}},
             {"schedule", {{"random_forward", 30}, {"lightlike", 5}, {"a0_max", 2.0}}},
             {"seed", 11}};
    const ValidationResult r = validate_config(doc);
    REQUIRE(r.ok());
    const RunResult result = run_experiment(*r.config, {tmp.path, 1, false});
    CHECK(result.exit_code == 0);
    const json summary = json::parse(slurp(result.summary_path));
    CHECK(summary["contraction_ok"] == true);
    CHECK(summary["forward"].get<int>() == 35);
}

TEST_CASE("selftest experiment reports every suite as passing") {
    TempDir tmp("selftest");
    json doc{{"experiment", "selftest"}, {"seed", 5}};
    const ValidationResult r = validate_config(doc);
    REQUIRE(r.ok());
    const RunResult result = run_experiment(*r.config, {tmp.path, 1, false});
    CHECK(result.exit_code == 0);
    const json summary = json::parse(slurp(result.summary_path));
    CHECK(summary["all_pass"] == true);
}

TEST_CASE("CLI exit codes and output-directory override" * doctest::skip(std::getenv("PPLUS_CLI") == nullptr)) {
    const std::string cli = std::getenv("PPLUS_CLI");
    TempDir tmp("cli");

    auto shell = [&](const std::string& args) {
        const int rc = std::system((("\"" + cli + "\" ") + args + " >/dev/null 2>&1").c_str());
        return WEXITSTATUS(rc);
    };

    const fs::path good = tmp.path / "good.json";
    std::ofstream(good) << minimal_dichotomy().dump();
    CHECK(shell("validate " + good.string()) == 0);

    json bad = minimal_dichotomy();
    bad["experiment"] = "nonsense";
    const fs::path bad_path = tmp.path / "bad.json";
    std::ofstream(bad_path) << bad.dump();
    CHECK(shell("validate " + bad_path.string()) == 1);
    CHECK(shell("run " + bad_path.string()) == 1);

    // PPLUS_OUT_DIR override steers the outputs when --out is absent
    const fs::path env_dir = tmp.path / "env_out";
    const int rc = std::system((("PPLUS_OUT_DIR=" + env_dir.string() + " \"") + cli + "\" run "
                                + good.string() + " >/dev/null 2>&1").c_str());
    CHECK(WEXITSTATUS(rc) == 0);
    CHECK(fs::exists(env_dir / "dichotomy.csv"));
    CHECK(fs::exists(env_dir / "manifest.json"));

    // negative time in the schedule: run fails with exit 1
    json neg{{"experiment", "evolve"},
             {"complex_mass", {{"mass", 1.0}, {"width", 0.2}}},
             {"grid", {{"mode", "one_d"}, {"u_max", 8.0}, {"n", 16}}},
             {"state", {{"family", "gaussian"}}},
             {"schedule", {{"t_values", {-1.0}}}}};
    const fs::path neg_path = tmp.path / "neg.json";
    std::ofstream(neg_path) << neg.dump();
    CHECK(shell("run " + neg_path.string() + " --out " + (tmp.path / "neg_out").string()) == 1);
}

TEST_CASE("grid spec JSON round-trip") {
    const GridSpec g{GridMode::ThreeD, 6.5, 24};
    const GridSpec back = grid_spec_from_json(to_json(g));
    CHECK(back.mode == g.mode);
    CHECK(back.u_max == g.u_max);
    CHECK(back.n == g.n);
    CHECK_THROWS_AS(grid_spec_from_json(json{{"mode", "two_d"}, {"u_max", 1.0}, {"n", 4}}),
                    std::invalid_argument);
}
