#ifndef RESTARTLAB_LOSS_HPP
#define RESTARTLAB_LOSS_HPP

#include <cstdint>
#include <vector>

#include "restartlab/strategy.hpp"

namespace restartlab {

/// Exact loss of a strategy at one lambda_hat.
/// loss = sum(lambda_0 .. lambda_{k_hat}) - lambda_hat, an exact integer;
/// relative_loss = loss / lambda_hat as a 64-bit float.
struct LossPoint {
    std::int64_t lambda_hat = 0;
    std::int64_t k_hat = 0;
    std::int64_t loss = 0;
    double relative_loss = 0.0;
};

/// LossPoints sampled over an ascending lambda_hat range.
struct LossCurve {
    StrategySpec spec;
    std::vector<LossPoint> points;
};

/// Exact reduced loss: accumulate lambda while lambda < lambda_hat, then
/// subtract lambda_hat. Requires lambda_hat >= lambda0.
LossPoint loss(const StrategySpec& spec, std::int64_t lambda_hat);

/// Full loss under the constant-generations model: g * loss.
std::int64_t full_loss(const StrategySpec& spec, std::int64_t lambda_hat, std::int64_t g);

/// One LossPoint per sampled lambda_hat in [lo, hi] with the given stride.
/// Computed in a single incremental pass over the lambda sequence; values are
/// identical to calling loss() per point.
LossCurve loss_curve(const StrategySpec& spec, std::int64_t lo, std::int64_t hi,
                     std::int64_t stride = 1);

/// Incremental walker behind loss_curve; also used by the sweep harness to
/// score every integer lambda_hat of a range in one pass.
class LossWalker {
public:
    explicit LossWalker(const StrategySpec& spec);

    /// Loss at lambda_hat; successive calls must not decrease lambda_hat.
    LossPoint at(std::int64_t lambda_hat);

    /// Last lambda generated so far (top of the materialized prefix).
    std::int64_t current_lambda() const noexcept { return lambda_; }

private:
    StrategySpec spec_;
    std::int64_t k_ = 0;
    std::int64_t lambda_ = 0;
    std::int64_t sum_ = 0;
};

}  // namespace restartlab

#endif
