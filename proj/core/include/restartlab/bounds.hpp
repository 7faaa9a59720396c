#ifndef RESTARTLAB_BOUNDS_HPP
#define RESTARTLAB_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "restartlab/strategy.hpp"

namespace restartlab {

/// Closed-form loss and relative-loss bounds at one lambda_hat.
/// rel_upper is absent for the additive and power-law types, which have no
/// finite closed-form relative upper bound.
struct BoundSet {
    std::int64_t lambda_hat = 0;
    double loss_lower = 0.0;
    double loss_upper = 0.0;
    double rel_lower = 0.0;
    std::optional<double> rel_upper;
};

/// Limit of a relative-loss bound for lambda_hat -> infinity.
struct AsymptoticBound {
    enum class Kind { FiniteUpper, FiniteLower, InfiniteLower };
    Kind kind = Kind::FiniteUpper;
    double value = 0.0;  // meaningless for InfiniteLower

    bool finite() const noexcept { return kind != Kind::InfiniteLower; }
};

/// Closed-form upper bound of the loss. Star and Times share one bound
/// expression; both kinds evaluate it identically.
double loss_upper(const StrategySpec& spec, std::int64_t lambda_hat);

/// Closed-form lower bound of the loss. May be negative near lambda0 for the
/// Star type; that is still a valid lower bound.
double loss_lower(const StrategySpec& spec, std::int64_t lambda_hat);

/// loss_upper / lambda_hat for Star/Times; absent for Plus/Pow.
std::optional<double> rel_upper(const StrategySpec& spec, std::int64_t lambda_hat);

/// loss_lower / lambda_hat (piecewise zero at lambda_hat = lambda0 for Pow).
double rel_lower(const StrategySpec& spec, std::int64_t lambda_hat);

/// All four bound values at once.
BoundSet bound_set(const StrategySpec& spec, std::int64_t lambda_hat);

/// rho + 1/(rho-1) for Star/Times; throws Unsupported for Plus/Pow, whose
/// relative loss is strictly unbounded.
AsymptoticBound asymptotic_rel_upper(StrategyKind kind, double rho);

/// 1/(rho-1) for Star/Times; InfiniteLower for Plus/Pow.
AsymptoticBound asymptotic_rel_lower(StrategyKind kind, double param);

/// Real-valued nu minimizing the additive upper loss bound:
/// sqrt(((lambda_hat-1)^2 - lambda0^2) / 2). Requires a positive radicand.
double optimal_nu(std::int64_t lambda0, std::int64_t lambda_hat);

/// Analytic minimizer of rho + 1/(rho-1): the pair (2.0, 3.0).
std::pair<double, double> optimal_rho() noexcept;

}  // namespace restartlab

#endif
