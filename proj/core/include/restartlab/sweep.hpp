#ifndef RESTARTLAB_SWEEP_HPP
#define RESTARTLAB_SWEEP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "restartlab/bounds.hpp"
#include "restartlab/loss.hpp"
#include "restartlab/strategy.hpp"

namespace restartlab {

/// One failed check inside a sweep.
struct Violation {
    std::string check;
    std::int64_t lambda_hat = 0;
    double observed = 0.0;
    double bound = 0.0;
};

/// Outcome of a verification sweep. Reports from disjoint sub-ranges merge
/// associatively, so sweeps can be partitioned across workers.
struct SweepReport {
    std::int64_t checks_run = 0;
    std::vector<Violation> violations;
    std::optional<std::pair<double, std::int64_t>> extrema;  // (max rel loss, argmax)

    bool ok() const noexcept { return violations.empty(); }
    void merge(SweepReport&& other);
};

/// Result of the bracketed minimization of rho + 1/(rho-1).
struct RhoMinimum {
    double rho = 0.0;
    double value = 0.0;
    bool interior = true;  // false when the minimum sits on a bracket edge
};

/// Tolerance used by every sweep comparison: relative slack 1e-9, absolute
/// slack 1e-12 near zero. Only absorbs float rounding of exact inequalities.
double sweep_slack(double bound) noexcept;

/// Checks loss_lower <= L <= loss_upper at every integer lambda_hat in
/// [lo, hi]. `threads` caps internal parallelism (0 = implementation default).
SweepReport sandwich_sweep(const StrategySpec& spec, std::int64_t lo, std::int64_t hi,
                           unsigned threads = 0);

/// sandwich_sweep with the upper bound shifted by `upper_offset` before
/// comparison. Test hook behind the CLI's debug-only --perturb-upper flag;
/// a negative offset must make the verifier report violations.
SweepReport sandwich_sweep_perturbed(const StrategySpec& spec, std::int64_t lo, std::int64_t hi,
                                     double upper_offset, unsigned threads = 0);

/// Checks unit descent of L within segments and jumps exactly at
/// lambda_k + 1, for every adjacent pair in [lo, hi].
SweepReport sawtooth_sweep(const StrategySpec& spec, std::int64_t lo, std::int64_t hi);

/// Maximum relative loss over [lo, hi] and its argmax (ties toward the
/// smaller lambda_hat).
std::pair<double, std::int64_t> max_relative_loss(const StrategySpec& spec, std::int64_t lo,
                                                  std::int64_t hi, unsigned threads = 0);

/// Golden-section minimization of rho + 1/(rho-1) on [rho_lo, rho_hi].
RhoMinimum minimize_asymptotic_upper(double rho_lo, double rho_hi, double tol);

/// Checks lambda*_k >= lambda_x_k for k <= k_max and, at each lambda_x_k,
/// the shared upper bound identity and that the Star lower bound stays below
/// the Times loss.
SweepReport star_times_nesting(std::int64_t lambda0, double rho, std::int64_t k_max);

}  // namespace restartlab

#endif
