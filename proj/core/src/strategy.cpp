#include "restartlab/strategy.hpp"

#include <cmath>

namespace restartlab {

const char* to_string(StrategyKind kind) noexcept {
    switch (kind) {
        case StrategyKind::Plus: return "plus";
        case StrategyKind::Star: return "star";
        case StrategyKind::Times: return "times";
        case StrategyKind::Pow: return "pow";
    }
    return "?";
}

StrategySpec StrategySpec::plus(std::int64_t lambda0, std::int64_t nu) {
    StrategySpec s;
    s.kind = StrategyKind::Plus;
    s.lambda0 = lambda0;
    s.nu = nu;
    return s;
}

StrategySpec StrategySpec::star(std::int64_t lambda0, double rho) {
    StrategySpec s;
    s.kind = StrategyKind::Star;
    s.lambda0 = lambda0;
    s.rho = rho;
    return s;
}

StrategySpec StrategySpec::times(std::int64_t lambda0, double rho) {
    StrategySpec s = star(lambda0, rho);
    s.kind = StrategyKind::Times;
    return s;
}

StrategySpec StrategySpec::power(std::int64_t lambda0, double alpha) {
    StrategySpec s;
    s.kind = StrategyKind::Pow;
    s.lambda0 = lambda0;
    s.alpha = alpha;
    return s;
}

double StrategySpec::parameter() const noexcept {
    switch (kind) {
        case StrategyKind::Plus: return static_cast<double>(nu);
        case StrategyKind::Star:
        case StrategyKind::Times: return rho;
        case StrategyKind::Pow: return alpha;
    }
    return 0.0;
}

std::int64_t ceil_snapped(double x) {
    if (std::isnan(x)) throw Overflow("lambda update is NaN");
    if (x >= static_cast<double>(kLambdaCap)) throw Overflow("lambda exceeds 2^62 cap");
    const double r = std::round(x);
    double c;
    if (std::abs(x - r) <= 1e-9 * std::max(1.0, std::abs(x))) {
        c = r;
    } else {
        c = std::ceil(x);
    }
    if (c >= static_cast<double>(kLambdaCap)) throw Overflow("lambda exceeds 2^62 cap");
    return static_cast<std::int64_t>(c);
}

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out) || out >= kLambdaCap) {
        throw Overflow("lambda exceeds 2^62 cap");
    }
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out) || out >= kLambdaCap) {
        throw Overflow("value exceeds 2^62 cap");
    }
    return out;
}

}  // namespace

StrategySpec validate(const StrategySpec& spec) {
    if (spec.lambda0 < 1) {
        throw InvalidParameter("lambda0", "start value must be >= 1");
    }
    switch (spec.kind) {
        case StrategyKind::Plus:
            if (spec.nu < 1) throw InvalidParameter("nu", "additive step must be >= 1");
            if (spec.rho != 0.0 || spec.alpha != 0.0) {
                throw InvalidParameter("kind", "plus spec carries a rho or alpha value");
            }
            break;
        case StrategyKind::Star:
        case StrategyKind::Times:
            if (!(spec.rho > 1.0)) throw InvalidParameter("rho", "multiplier must be > 1");
            if (spec.nu != 0 || spec.alpha != 0.0) {
                throw InvalidParameter("kind", "multiplicative spec carries a nu or alpha value");
            }
            // Snapped ceiling must still increase on the first step.
            if (ceil_snapped(static_cast<double>(spec.lambda0) * spec.rho) <= spec.lambda0) {
                throw InvalidParameter("rho", "first restart does not increase lambda");
            }
            break;
        case StrategyKind::Pow:
            if (!(spec.alpha >= 1.0)) throw InvalidParameter("alpha", "exponent must be >= 1");
            if (spec.nu != 0 || spec.rho != 0.0) {
                throw InvalidParameter("kind", "power spec carries a nu or rho value");
            }
            break;
    }
    return spec;
}

std::int64_t next_lambda(const StrategySpec& spec, std::int64_t current, std::int64_t k) {
    std::int64_t next = 0;
    switch (spec.kind) {
        case StrategyKind::Plus:
            next = checked_add(current, spec.nu);
            break;
        case StrategyKind::Star:
            next = ceil_snapped(static_cast<double>(current) * spec.rho);
            break;
        case StrategyKind::Times:
            next = ceil_snapped(static_cast<double>(spec.lambda0) * std::pow(spec.rho, static_cast<double>(k)));
            break;
        case StrategyKind::Pow:
            next = ceil_snapped(static_cast<double>(spec.lambda0) *
                                std::pow(static_cast<double>(k + 1), spec.alpha));
            break;
    }
    // The single-ceiling closed form may plateau when lambda0*rho^k advances
    // by less than one; every other type increases strictly.
    const std::int64_t floor_value =
        spec.kind == StrategyKind::Times ? current : current + 1;
    if (next < floor_value) {
        throw InvalidParameter("spec", "lambda sequence is not increasing");
    }
    return next;
}

std::int64_t lambda_at(const StrategySpec& spec, std::int64_t k) {
    switch (spec.kind) {
        case StrategyKind::Plus:
            return checked_add(spec.lambda0, checked_mul(k, spec.nu));
        case StrategyKind::Star: {
            std::int64_t lambda = spec.lambda0;
            for (std::int64_t j = 1; j <= k; ++j) {
                lambda = next_lambda(spec, lambda, j);
            }
            return lambda;
        }
        case StrategyKind::Times:
            if (k == 0) return spec.lambda0;
            return ceil_snapped(static_cast<double>(spec.lambda0) * std::pow(spec.rho, static_cast<double>(k)));
        case StrategyKind::Pow:
            if (k == 0) return spec.lambda0;
            return ceil_snapped(static_cast<double>(spec.lambda0) *
                                std::pow(static_cast<double>(k + 1), spec.alpha));
    }
    throw InvalidParameter("kind", "unknown strategy kind");
}

std::int64_t restarts_needed(const StrategySpec& spec, std::int64_t lambda_hat) {
    if (lambda_hat < 1) throw DomainError("lambda_hat must be >= 1");
    std::int64_t k = 0;
    std::int64_t lambda = spec.lambda0;
    while (lambda < lambda_hat) {
        ++k;
        lambda = next_lambda(spec, lambda, k);
    }
    return k;
}

LambdaSequence sequence_until(const StrategySpec& spec, std::int64_t lambda_hat) {
    if (lambda_hat < 1) throw DomainError("lambda_hat must be >= 1");
    LambdaSequence seq;
    seq.spec = spec;
    std::int64_t k = 0;
    std::int64_t lambda = spec.lambda0;
    seq.values.push_back(lambda);
    while (lambda < lambda_hat) {
        ++k;
        lambda = next_lambda(spec, lambda, k);
        seq.values.push_back(lambda);
    }
    return seq;
}

}  // namespace restartlab
