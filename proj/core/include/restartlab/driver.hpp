#ifndef RESTARTLAB_DRIVER_HPP
#define RESTARTLAB_DRIVER_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "restartlab/strategy.hpp"

namespace restartlab {

/// Result of one black-box run at a given lambda.
struct BlackBoxOutcome {
    bool success = false;
    std::int64_t evaluations = 0;  // >= 1
};

/// A black box invoked once per restart with the current lambda.
using BlackBox = std::function<BlackBoxOutcome(std::int64_t lambda)>;

/// Per-run record plus totals from driving a black box to success.
struct RestartTrace {
    struct Run {
        std::int64_t k = 0;
        std::int64_t lambda = 0;
        std::int64_t evaluations = 0;
        bool success = false;
    };

    StrategySpec spec;
    std::vector<Run> runs;
    std::int64_t total_evaluations = 0;
    bool succeeded = false;
};

/// Runs the black box at lambda_0, lambda_1, ... until it succeeds.
/// Throws CapExceeded after k_cap unsuccessful runs.
RestartTrace run_restarts(const StrategySpec& spec, const BlackBox& blackbox,
                          std::int64_t k_cap = 64);

/// Deterministic threshold oracle: success iff lambda >= lambda_hat,
/// charging lambda * g evaluations per run.
BlackBox threshold_blackbox(std::int64_t lambda_hat, std::int64_t g);

}  // namespace restartlab

#endif
