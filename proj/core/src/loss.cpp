#include "restartlab/loss.hpp"

namespace restartlab {

namespace {

std::int64_t checked_sum(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out) || out >= kLambdaCap) {
        throw Overflow("loss accumulator exceeds 2^62 cap");
    }
    return out;
}

}  // namespace

LossWalker::LossWalker(const StrategySpec& spec)
    : spec_(spec), lambda_(spec.lambda0), sum_(spec.lambda0) {}

LossPoint LossWalker::at(std::int64_t lambda_hat) {
    if (lambda_hat < spec_.lambda0) {
        throw DomainError("lambda_hat below lambda0 is outside the loss domain");
    }
    while (lambda_ < lambda_hat) {
        ++k_;
        lambda_ = next_lambda(spec_, lambda_, k_);
        sum_ = checked_sum(sum_, lambda_);
    }
    LossPoint p;
    p.lambda_hat = lambda_hat;
    p.k_hat = k_;
    p.loss = sum_ - lambda_hat;
    p.relative_loss = static_cast<double>(p.loss) / static_cast<double>(lambda_hat);
    return p;
}

LossPoint loss(const StrategySpec& spec, std::int64_t lambda_hat) {
    LossWalker walker(spec);
    return walker.at(lambda_hat);
}

std::int64_t full_loss(const StrategySpec& spec, std::int64_t lambda_hat, std::int64_t g) {
    if (g < 1) throw DomainError("generation count must be >= 1");
    const std::int64_t reduced = loss(spec, lambda_hat).loss;
    std::int64_t out;
    if (__builtin_mul_overflow(reduced, g, &out) || out >= kLambdaCap) {
        throw Overflow("full loss exceeds 2^62 cap");
    }
    return out;
}

LossCurve loss_curve(const StrategySpec& spec, std::int64_t lo, std::int64_t hi,
                     std::int64_t stride) {
    if (lo < spec.lambda0 || hi < lo) {
        throw DomainError("curve range must satisfy lambda0 <= lo <= hi");
    }
    if (stride < 1) throw DomainError("stride must be >= 1");
    LossCurve curve;
    curve.spec = spec;
    curve.points.reserve(static_cast<std::size_t>((hi - lo) / stride + 1));
    LossWalker walker(spec);
    for (std::int64_t lh = lo; lh <= hi; lh += stride) {
        curve.points.push_back(walker.at(lh));
    }
    return curve;
}

}  // namespace restartlab
