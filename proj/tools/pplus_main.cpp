#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pplus/runner.hpp"
#include "pplus/selftest.hpp"
#include "pplus/version.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

pplus::ExperimentConfig load_config(const std::string& path) {
    const auto result = pplus::validate_config_text(read_file(path));
    if (!result.ok()) {
        std::cerr << "config errors in " << path << ":\n";
        for (const auto& e : result.errors) std::cerr << "  " << e << "\n";
        throw std::runtime_error("invalid configuration");
    }
    return *result.config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pplus: numerical laboratory for the causal Poincare semigroup"};
    app.set_version_flag("--version", pplus::kVersion);
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    int threads = 1;
    bool deterministic = false;

    CLI::App* run = app.add_subcommand("run", "run an experiment from a JSON config");
    run->add_option("config", config_path, "path to the experiment config")->required();
    run->add_option("--out", out_dir, "output directory (overrides PPLUS_OUT_DIR)");
    run->add_option("--threads", threads, "worker threads for lattice scans")->check(CLI::PositiveNumber);
    run->add_flag("--deterministic", deterministic, "force compensated, ordered reduction");

    CLI::App* validate = app.add_subcommand("validate", "validate a JSON config without running");
    validate->add_option("config", config_path, "path to the experiment config")->required();

    std::uint64_t seed = 1;
    CLI::App* selftest = app.add_subcommand("selftest", "run the randomized property suites");
    selftest->add_option("--seed", seed, "RNG seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            pplus::RunOptions opts;
            if (!out_dir.empty()) {
                opts.out_dir = out_dir;
            } else if (const char* env = std::getenv("PPLUS_OUT_DIR")) {
                opts.out_dir = env;
            }
            opts.threads = threads;
            opts.deterministic = deterministic;

            const pplus::ExperimentConfig cfg = load_config(config_path);
            const pplus::RunResult result = pplus::run_experiment(cfg, opts);
            std::cout << pplus::experiment_name(cfg.experiment) << ": "
                      << result.summary.value("verdict", "done") << " (outputs in "
                      << opts.out_dir.string() << ")\n";
            return result.exit_code;
        }
        if (validate->parsed()) {
            const auto result = pplus::validate_config_text(read_file(config_path));
            if (!result.ok()) {
                std::cerr << "config errors in " << config_path << ":\n";
                for (const auto& e : result.errors) std::cerr << "  " << e << "\n";
                return 1;
            }
            std::cout << "valid: " << pplus::experiment_name(result.config->experiment) << "\n";
            return 0;
        }
        if (selftest->parsed()) {
            bool all_pass = true;
            for (const auto& r : pplus::run_selftest(seed)) {
                all_pass = all_pass && r.pass;
                std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " (trials=" << r.trials
                          << ", max_dev=" << r.max_deviation << ", tol=" << r.tolerance << ")\n";
            }
            return all_pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
