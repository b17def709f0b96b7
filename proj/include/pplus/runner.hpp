#ifndef PPLUS_RUNNER_HPP
#define PPLUS_RUNNER_HPP

#include <filesystem>

#include "pplus/config.hpp"
#include "pplus/report_io.hpp"

namespace pplus {

struct RunOptions {
    std::filesystem::path out_dir = ".";
    int threads = 1;
    bool deterministic = false;
};

/// Exit codes: 0 completed, 2 verdict inconclusive, 1 error (thrown).
struct RunResult {
    int exit_code = 0;
    json summary;
    std::filesystem::path csv_path;
    std::filesystem::path summary_path;
    std::filesystem::path manifest_path;
};

/// Dispatches the experiment, writes <name>.csv, <name>.summary.json and
/// manifest.json (atomically, manifest last) into out_dir. Identical
/// (config, seed) pairs reproduce byte-identical CSV output; quadrature
/// reductions are compensated and ordered regardless of the thread count.
RunResult run_experiment(const ExperimentConfig& cfg, const RunOptions& opts);

}  // namespace pplus

#endif
