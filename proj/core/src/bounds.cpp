#include "restartlab/bounds.hpp"

#include <cmath>

namespace restartlab {

namespace {

void require_domain(const StrategySpec& spec, std::int64_t lambda_hat) {
    if (lambda_hat < spec.lambda0) {
        throw DomainError("lambda_hat below lambda0 is outside the bound domain");
    }
}

// Shared upper bound of the two multiplicative types. The chained-ceiling
// and single-ceiling forms are algebraically identical, so both kinds
// evaluate this one expression and agree to the last bit.
double mult_loss_upper(double lambda0, double rho, double lambda_hat) {
    return lambda_hat * (rho + 1.0 / (rho - 1.0)) - lambda0 / (rho - 1.0) +
           std::log(lambda_hat / lambda0) / std::log(rho);
}

// alpha-th root via exp(ln(x)/alpha); x >= 0 on the bound domain.
double root(double x, double alpha) {
    if (x == 0.0) return 0.0;
    return std::exp(std::log(x) / alpha);
}

}  // namespace

double loss_upper(const StrategySpec& spec, std::int64_t lambda_hat) {
    require_domain(spec, lambda_hat);
    const double lh = static_cast<double>(lambda_hat);
    const double l0 = static_cast<double>(spec.lambda0);
    switch (spec.kind) {
        case StrategyKind::Plus: {
            const double nu = static_cast<double>(spec.nu);
            return 0.5 * (lh - l0 - 1.0) * ((lh + l0 - 1.0) / nu + 1.0) + l0 + nu - 1.0;
        }
        case StrategyKind::Star:
        case StrategyKind::Times:
            return mult_loss_upper(l0, spec.rho, lh);
        case StrategyKind::Pow: {
            const double a = spec.alpha;
            const double t = root((lh - 1.0) / l0, a);
            return l0 / (a + 1.0) * std::pow(t + 2.0, a + 1.0) + t - l0 / (a + 1.0);
        }
    }
    throw InvalidParameter("kind", "unknown strategy kind");
}

double loss_lower(const StrategySpec& spec, std::int64_t lambda_hat) {
    require_domain(spec, lambda_hat);
    const double lh = static_cast<double>(lambda_hat);
    const double l0 = static_cast<double>(spec.lambda0);
    switch (spec.kind) {
        case StrategyKind::Plus: {
            const double nu = static_cast<double>(spec.nu);
            return 0.5 * (lh - l0) * ((lh + l0) / nu - 1.0);
        }
        case StrategyKind::Star:
            return (lh - l0 - std::log(lh / l0) / std::log(spec.rho) - 1.0) / (spec.rho - 1.0);
        case StrategyKind::Times:
            return (lh - 1.0 - l0) / (spec.rho - 1.0);
        case StrategyKind::Pow: {
            if (lambda_hat == spec.lambda0) return 0.0;
            const double a = spec.alpha;
            const double t = root((lh - 1.0) / l0, a);
            return l0 / (a + 1.0) * std::pow(t - 1.0, a + 1.0);
        }
    }
    throw InvalidParameter("kind", "unknown strategy kind");
}

std::optional<double> rel_upper(const StrategySpec& spec, std::int64_t lambda_hat) {
    require_domain(spec, lambda_hat);
    if (spec.kind == StrategyKind::Plus || spec.kind == StrategyKind::Pow) {
        return std::nullopt;
    }
    return loss_upper(spec, lambda_hat) / static_cast<double>(lambda_hat);
}

double rel_lower(const StrategySpec& spec, std::int64_t lambda_hat) {
    require_domain(spec, lambda_hat);
    return loss_lower(spec, lambda_hat) / static_cast<double>(lambda_hat);
}

BoundSet bound_set(const StrategySpec& spec, std::int64_t lambda_hat) {
    BoundSet b;
    b.lambda_hat = lambda_hat;
    b.loss_lower = loss_lower(spec, lambda_hat);
    b.loss_upper = loss_upper(spec, lambda_hat);
    b.rel_lower = b.loss_lower / static_cast<double>(lambda_hat);
    if (spec.kind == StrategyKind::Star || spec.kind == StrategyKind::Times) {
        b.rel_upper = b.loss_upper / static_cast<double>(lambda_hat);
    }
    return b;
}

AsymptoticBound asymptotic_rel_upper(StrategyKind kind, double rho) {
    if (kind == StrategyKind::Plus || kind == StrategyKind::Pow) {
        throw Unsupported("no finite asymptotic upper bound exists for this strategy type");
    }
    if (!(rho > 1.0)) throw InvalidParameter("rho", "multiplier must be > 1");
    return {AsymptoticBound::Kind::FiniteUpper, rho + 1.0 / (rho - 1.0)};
}

AsymptoticBound asymptotic_rel_lower(StrategyKind kind, double param) {
    switch (kind) {
        case StrategyKind::Star:
        case StrategyKind::Times:
            if (!(param > 1.0)) throw InvalidParameter("rho", "multiplier must be > 1");
            return {AsymptoticBound::Kind::FiniteLower, 1.0 / (param - 1.0)};
        case StrategyKind::Plus:
            if (!(param >= 1.0)) throw InvalidParameter("nu", "additive step must be >= 1");
            return {AsymptoticBound::Kind::InfiniteLower, 0.0};
        case StrategyKind::Pow:
            if (!(param >= 1.0)) throw InvalidParameter("alpha", "exponent must be >= 1");
            return {AsymptoticBound::Kind::InfiniteLower, 0.0};
    }
    throw InvalidParameter("kind", "unknown strategy kind");
}

double optimal_nu(std::int64_t lambda0, std::int64_t lambda_hat) {
    const double lh = static_cast<double>(lambda_hat);
    const double l0 = static_cast<double>(lambda0);
    const double radicand = 0.5 * ((lh - 1.0) * (lh - 1.0) - l0 * l0);
    if (!(radicand > 0.0)) {
        throw DomainError("optimal nu requires (lambda_hat - 1)^2 > lambda0^2");
    }
    return std::sqrt(radicand);
}

std::pair<double, double> optimal_rho() noexcept {
    return {2.0, 3.0};
}

}  // namespace restartlab
