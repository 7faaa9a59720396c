#include "restartlab/driver.hpp"

namespace restartlab {

RestartTrace run_restarts(const StrategySpec& spec, const BlackBox& blackbox,
                          std::int64_t k_cap) {
    if (k_cap < 1) throw InvalidParameter("k_cap", "run cap must be >= 1");

    RestartTrace trace;
    trace.spec = spec;
    std::int64_t lambda = spec.lambda0;
    for (std::int64_t k = 0; k < k_cap; ++k) {
        if (k > 0) lambda = next_lambda(spec, lambda, k);
        const BlackBoxOutcome outcome = blackbox(lambda);
        if (outcome.evaluations < 1) {
            throw InvalidParameter("blackbox", "a run must consume at least one evaluation");
        }
        std::int64_t total;
        if (__builtin_add_overflow(trace.total_evaluations, outcome.evaluations, &total) ||
            total >= kLambdaCap) {
            throw Overflow("evaluation total exceeds 2^62 cap");
        }
        trace.total_evaluations = total;
        trace.runs.push_back({k, lambda, outcome.evaluations, outcome.success});
        if (outcome.success) {
            trace.succeeded = true;
            return trace;
        }
    }
    throw CapExceeded(k_cap);
}

BlackBox threshold_blackbox(std::int64_t lambda_hat, std::int64_t g) {
    if (lambda_hat < 1) throw InvalidParameter("lambda_hat", "threshold must be >= 1");
    if (g < 1) throw InvalidParameter("g", "generation count must be >= 1");
    return [lambda_hat, g](std::int64_t lambda) {
        std::int64_t evals;
        if (__builtin_mul_overflow(lambda, g, &evals) || evals >= kLambdaCap) {
            throw Overflow("evaluation count exceeds 2^62 cap");
        }
        return BlackBoxOutcome{lambda >= lambda_hat, evals};
    };
}

}  // namespace restartlab
