#include "restartlab/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace restartlab {

void SweepReport::merge(SweepReport&& other) {
    checks_run += other.checks_run;
    violations.insert(violations.end(), std::make_move_iterator(other.violations.begin()),
                      std::make_move_iterator(other.violations.end()));
    if (other.extrema) {
        if (!extrema || other.extrema->first > extrema->first ||
            (other.extrema->first == extrema->first && other.extrema->second < extrema->second)) {
            extrema = other.extrema;
        }
    }
}

double sweep_slack(double bound) noexcept {
    return std::max(1e-12, 1e-9 * std::abs(bound));
}

namespace {

SweepReport sandwich_chunk(const StrategySpec& spec, std::int64_t lo, std::int64_t hi,
                           double upper_offset) {
    SweepReport report;
    LossWalker walker(spec);
    for (std::int64_t lh = lo; lh <= hi; ++lh) {
        const double exact = static_cast<double>(walker.at(lh).loss);
        const double low = loss_lower(spec, lh);
        const double up = loss_upper(spec, lh) + upper_offset;
        report.checks_run += 2;
        if (exact < low - sweep_slack(low)) {
            report.violations.push_back({"loss_lower", lh, exact, low});
        }
        if (exact > up + sweep_slack(up)) {
            report.violations.push_back({"loss_upper", lh, exact, up});
        }
    }
    return report;
}

template <typename ChunkFn>
SweepReport run_partitioned(std::int64_t lo, std::int64_t hi, unsigned threads, ChunkFn chunk) {
    if (threads == 0) threads = 1;
    const std::int64_t span = hi - lo + 1;
    const auto workers = static_cast<std::int64_t>(
        std::min<std::int64_t>(threads, std::max<std::int64_t>(span, 1)));
    if (workers <= 1) return chunk(lo, hi);

    std::vector<SweepReport> parts(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (std::int64_t w = 0; w < workers; ++w) {
        const std::int64_t a = lo + span * w / workers;
        const std::int64_t b = lo + span * (w + 1) / workers - 1;
        pool.emplace_back([&, w, a, b] { parts[static_cast<std::size_t>(w)] = chunk(a, b); });
    }
    for (auto& t : pool) t.join();

    SweepReport merged;
    for (auto& part : parts) merged.merge(std::move(part));
    return merged;
}

}  // namespace

SweepReport sandwich_sweep(const StrategySpec& spec, std::int64_t lo, std::int64_t hi,
                           unsigned threads) {
    if (lo < spec.lambda0 || hi < lo) {
        throw DomainError("sweep range must satisfy lambda0 <= lo <= hi");
    }
    return run_partitioned(lo, hi, threads, [&](std::int64_t a, std::int64_t b) {
        return sandwich_chunk(spec, a, b, 0.0);
    });
}

SweepReport sandwich_sweep_perturbed(const StrategySpec& spec, std::int64_t lo, std::int64_t hi,
                                     double upper_offset, unsigned threads) {
    if (lo < spec.lambda0 || hi < lo) {
        throw DomainError("sweep range must satisfy lambda0 <= lo <= hi");
    }
    return run_partitioned(lo, hi, threads, [&](std::int64_t a, std::int64_t b) {
        return sandwich_chunk(spec, a, b, upper_offset);
    });
}

SweepReport sawtooth_sweep(const StrategySpec& spec, std::int64_t lo, std::int64_t hi) {
    if (lo < spec.lambda0 || hi < lo) {
        throw DomainError("sweep range must satisfy lambda0 <= lo <= hi");
    }
    SweepReport report;
    LossWalker walker(spec);
    LossPoint prev = walker.at(lo);
    for (std::int64_t lh = lo + 1; lh <= hi; ++lh) {
        const std::int64_t prev_top = walker.current_lambda();
        const LossPoint cur = walker.at(lh);
        ++report.checks_run;
        if (cur.k_hat == prev.k_hat) {
            // Within a segment the loss descends by exactly one per step.
            if (cur.loss != prev.loss - 1) {
                report.violations.push_back({"unit_descent", lh, static_cast<double>(cur.loss),
                                             static_cast<double>(prev.loss - 1)});
            }
        } else {
            // A jump is legal only right after a sequence point lambda_k.
            // Several indices may be crossed at once when the single-ceiling
            // form plateaus; all of them must sit at the previous segment top.
            bool legal = prev.lambda_hat == prev_top && cur.k_hat > prev.k_hat;
            for (std::int64_t j = prev.k_hat + 1; legal && j < cur.k_hat; ++j) {
                legal = lambda_at(spec, j) == prev_top;
            }
            if (!legal) {
                report.violations.push_back({"jump_location", lh, static_cast<double>(cur.k_hat),
                                             static_cast<double>(prev.k_hat)});
            }
        }
        prev = cur;
    }
    return report;
}

std::pair<double, std::int64_t> max_relative_loss(const StrategySpec& spec, std::int64_t lo,
                                                  std::int64_t hi, unsigned threads) {
    if (lo < spec.lambda0 || hi < lo) {
        throw DomainError("sweep range must satisfy lambda0 <= lo <= hi");
    }
    SweepReport report = run_partitioned(lo, hi, threads, [&](std::int64_t a, std::int64_t b) {
        SweepReport part;
        LossWalker walker(spec);
        double best = -1.0;
        std::int64_t arg = a;
        for (std::int64_t lh = a; lh <= b; ++lh) {
            const double rel = walker.at(lh).relative_loss;
            ++part.checks_run;
            if (rel > best) {
                best = rel;
                arg = lh;
            }
        }
        part.extrema = {best, arg};
        return part;
    });
    return *report.extrema;
}

RhoMinimum minimize_asymptotic_upper(double rho_lo, double rho_hi, double tol) {
    if (!(rho_lo > 1.0) || !(rho_hi > rho_lo)) {
        throw InvalidParameter("rho", "bracket must satisfy 1 < rho_lo < rho_hi");
    }
    if (!(tol > 0.0)) throw InvalidParameter("tol", "tolerance must be positive");

    // Comparisons near the flat minimum are limited to sqrt(epsilon) of the
    // working precision; extended precision keeps that floor below any
    // reasonable tol.
    const auto objective = [](long double rho) { return rho + 1.0L / (rho - 1.0L); };
    const long double inv_phi = (std::sqrt(5.0L) - 1.0L) / 2.0L;

    long double a = rho_lo;
    long double b = rho_hi;
    long double c = b - inv_phi * (b - a);
    long double d = a + inv_phi * (b - a);
    long double fc = objective(c);
    long double fd = objective(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = objective(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = objective(d);
        }
    }

    RhoMinimum result;
    result.rho = static_cast<double>(0.5L * (a + b));
    // Snap to a bracket edge when the unimodal minimum lies outside.
    if (objective(rho_lo) <= objective(result.rho)) {
        result.rho = rho_lo;
        result.interior = false;
    } else if (objective(rho_hi) <= objective(result.rho)) {
        result.rho = rho_hi;
        result.interior = false;
    }
    result.value = static_cast<double>(objective(result.rho));
    return result;
}

SweepReport star_times_nesting(std::int64_t lambda0, double rho, std::int64_t k_max) {
    const StrategySpec star = validate(StrategySpec::star(lambda0, rho));
    const StrategySpec times = validate(StrategySpec::times(lambda0, rho));
    SweepReport report;
    std::int64_t star_lambda = lambda0;
    for (std::int64_t k = 0; k <= k_max; ++k) {
        if (k > 0) star_lambda = next_lambda(star, star_lambda, k);
        std::int64_t times_lambda;
        try {
            times_lambda = lambda_at(times, k);
        } catch (const Overflow&) {
            break;  // remaining indices are unreachable at this cap
        }
        ++report.checks_run;
        if (star_lambda < times_lambda) {
            report.violations.push_back({"star_dominates_times", times_lambda,
                                         static_cast<double>(star_lambda),
                                         static_cast<double>(times_lambda)});
        }

        // Shared upper bound and cross-type lower bound at the Times corner.
        const std::int64_t lh = times_lambda;
        const double up_star = loss_upper(star, lh);
        const double up_times = loss_upper(times, lh);
        ++report.checks_run;
        if (up_star != up_times) {
            report.violations.push_back({"shared_upper_bound", lh, up_star, up_times});
        }
        const double low_star = loss_lower(star, lh);
        const double times_loss = static_cast<double>(loss(times, lh).loss);
        ++report.checks_run;
        if (low_star > times_loss + sweep_slack(low_star)) {
            report.violations.push_back({"star_lower_bounds_times", lh, times_loss, low_star});
        }
    }
    return report;
}

}  // namespace restartlab
