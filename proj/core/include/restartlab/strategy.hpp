#ifndef RESTARTLAB_STRATEGY_HPP
#define RESTARTLAB_STRATEGY_HPP

#include <cstdint>
#include <vector>

#include "restartlab/errors.hpp"

namespace restartlab {

/// The four parameter-dependent strategy types.
///  Plus  : lambda_k = lambda0 + k*nu
///  Star  : lambda_k = ceil(lambda_{k-1} * rho)           (chained ceilings)
///  Times : lambda_k = ceil(lambda0 * rho^k)              (single ceiling)
///  Pow   : lambda_k = ceil(lambda0 * (k+1)^alpha)
enum class StrategyKind { Plus, Star, Times, Pow };

const char* to_string(StrategyKind kind) noexcept;

/// Lambda values and accumulated sums must stay below this cap; exceeding it
/// raises Overflow instead of wrapping.
inline constexpr std::int64_t kLambdaCap = std::int64_t{1} << 62;

/// A strategy type together with its start value and restart parameter.
/// Exactly the parameter matching `kind` is meaningful; use the named
/// factories so the unused fields stay zeroed.
struct StrategySpec {
    StrategyKind kind = StrategyKind::Plus;
    std::int64_t lambda0 = 1;
    std::int64_t nu = 0;   // Plus only, nu >= 1
    double rho = 0.0;      // Star/Times only, rho > 1
    double alpha = 0.0;    // Pow only, alpha >= 1

    static StrategySpec plus(std::int64_t lambda0, std::int64_t nu);
    static StrategySpec star(std::int64_t lambda0, double rho);
    static StrategySpec times(std::int64_t lambda0, double rho);
    static StrategySpec power(std::int64_t lambda0, double alpha);

    /// The restart parameter as a real number, whichever field it lives in.
    double parameter() const noexcept;
};

/// A materialized finite prefix (lambda_0 ... lambda_K) of a strategy.
struct LambdaSequence {
    StrategySpec spec;
    std::vector<std::int64_t> values;
};

/// Checks all parameter constraints and returns the spec unchanged.
/// Throws InvalidParameter on any violation, including multiplicative specs
/// whose first step would not strictly increase after ceiling snapping.
StrategySpec validate(const StrategySpec& spec);

/// ceil(x) with an epsilon snap: values within 1e-9 (relative) of an integer
/// are treated as that integer first, so binary artifacts of decimal rho
/// never inflate the ceiling. Throws Overflow beyond the cap.
std::int64_t ceil_snapped(double x);

/// lambda_k given lambda_{k-1} (`current`) and the restart index k.
/// Plus/Star use `current`; Times/Pow use the closed form in k.
std::int64_t next_lambda(const StrategySpec& spec, std::int64_t current, std::int64_t k);

/// lambda_k. Closed form for Plus/Times/Pow; iterated ceilings for Star.
std::int64_t lambda_at(const StrategySpec& spec, std::int64_t k);

/// Minimal k with lambda_k >= lambda_hat.
std::int64_t restarts_needed(const StrategySpec& spec, std::int64_t lambda_hat);

/// The prefix lambda_0 ... lambda_{k_hat}; last element is the first one
/// reaching lambda_hat.
LambdaSequence sequence_until(const StrategySpec& spec, std::int64_t lambda_hat);

}  // namespace restartlab

#endif
