// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. argv[1] must be the path to
// the restartlab CLI binary (used by criterion 1).

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "alg1_oracle.hpp"
#include "restartlab/restartlab.hpp"

using json = nlohmann::json;
using namespace restartlab;

namespace {

int g_failures = 0;

class Criterion {
public:
    Criterion(int number, std::string what)
        : number_(number), what_(std::move(what)), start_(std::chrono::steady_clock::now()) {}

    double elapsed_seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

    void finish(bool pass, const std::string& detail = "") {
        std::printf("%s criterion %d: %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", number_,
                    what_.c_str(), elapsed_seconds(), detail.empty() ? "" : " -- ",
                    detail.c_str());
        std::fflush(stdout);
        if (!pass) ++g_failures;
    }

private:
    int number_;
    std::string what_;
    std::chrono::steady_clock::time_point start_;
};

std::vector<StrategySpec> parameter_grid() {
    std::vector<StrategySpec> specs;
    for (std::int64_t l0 : {1, 2, 10}) {
        for (std::int64_t nu : {1, 2, 5, 20}) specs.push_back(StrategySpec::plus(l0, nu));
        for (double rho : {1.1, 1.5, 2.0, 3.0, 5.0}) {
            specs.push_back(StrategySpec::star(l0, rho));
            specs.push_back(StrategySpec::times(l0, rho));
        }
        for (double alpha : {1.0, 1.5, 2.0, 3.0}) specs.push_back(StrategySpec::power(l0, alpha));
    }
    for (auto& s : specs) validate(s);
    return specs;
}

std::string run_cli(const std::string& binary, const std::string& args, int& exit_code) {
    const std::string cmd = binary + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        exit_code = -1;
        return "";
    }
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

// Criterion 1: optimize --target rho returns the analytic 2.0 and a
// golden-section confirmation within 1e-8, objective 3.0 within 1e-12, < 1 s.
void criterion_optimal_rho(const std::string& binary) {
    Criterion c(1, "optimal multiplicative parameter rho = 2, objective 3");
    bool pass = false;
    std::string detail;
    int exit_code = -1;
    const std::string out = run_cli(binary, "optimize --target rho", exit_code);
    try {
        const json j = json::parse(out);
        pass = exit_code == 0 && j["optimum"].get<double>() == 2.0 &&
               std::abs(j["numeric_optimum"].get<double>() - 2.0) <= 1e-8 &&
               j["objective_value"].get<double>() == 3.0 &&
               std::abs(j["numeric_objective"].get<double>() - 3.0) <= 1e-12;
    } catch (const std::exception& e) {
        detail = e.what();
    }
    pass = pass && c.elapsed_seconds() < 1.0;
    c.finish(pass, detail);
}

// Criterion 2: optimal_nu(2, 100) in [69.9, 70.1], < 1 s.
void criterion_optimal_nu() {
    Criterion c(2, "optimal additive parameter nu(2, 100) ~ 70");
    const double nu_hat = optimal_nu(2, 100);
    c.finish(nu_hat >= 69.9 && nu_hat <= 70.1 && c.elapsed_seconds() < 1.0,
             "nu_hat = " + std::to_string(nu_hat));
}

// Criterion 3: sandwich over the full parameter grid, lambda_hat up to 1e4,
// eps = 1e-9 * max(1, L_up), zero violations, < 30 s.
void criterion_sandwich() {
    Criterion c(3, "sandwich suite over the parameter grid");
    std::int64_t violations = 0;
    std::int64_t checks = 0;
    for (const auto& spec : parameter_grid()) {
        LossWalker walker(spec);
        for (std::int64_t lh = spec.lambda0; lh <= 10000; ++lh) {
            const double exact = static_cast<double>(walker.at(lh).loss);
            const double low = loss_lower(spec, lh);
            const double up = loss_upper(spec, lh);
            const double eps = 1e-9 * std::max(1.0, up);
            if (exact < low - eps || exact > up + eps) ++violations;
            ++checks;
        }
    }
    c.finish(violations == 0 && c.elapsed_seconds() < 30.0,
             std::to_string(checks) + " checks, " + std::to_string(violations) + " violations");
}

// Criterion 4: saw-tooth over the same grid, lambda_hat up to 1e3.
void criterion_sawtooth() {
    Criterion c(4, "saw-tooth suite over the parameter grid");
    std::int64_t violations = 0;
    for (const auto& spec : parameter_grid()) {
        const SweepReport r = sawtooth_sweep(spec, spec.lambda0, 1000);
        violations += static_cast<std::int64_t>(r.violations.size());
    }
    c.finish(violations == 0, std::to_string(violations) + " violations");
}

// Criterion 5: star and times upper bounds identical to the last bit on 1e3
// random (lambda0, rho, lambda_hat) triples.
void criterion_shared_bound() {
    Criterion c(5, "shared star/times upper bound identity");
    std::mt19937 rng(17);
    std::uniform_int_distribution<std::int64_t> l0_dist(1, 100);
    std::uniform_real_distribution<double> rho_dist(1.001, 10.0);
    std::uniform_int_distribution<std::int64_t> lh_off(0, 1000000);
    std::int64_t mismatches = 0;
    for (int i = 0; i < 1000; ++i) {
        const std::int64_t l0 = l0_dist(rng);
        const double rho = rho_dist(rng);
        const std::int64_t lh = l0 + lh_off(rng);
        const double star = loss_upper(StrategySpec::star(l0, rho), lh);
        const double times = loss_upper(StrategySpec::times(l0, rho), lh);
        if (star != times) ++mismatches;
    }
    c.finish(mismatches == 0, std::to_string(mismatches) + " mismatches");
}

// Criterion 6: for rho = 2 the relative loss stays pointwise below its upper
// bound over [1e2, 1e6] and its maximum stays <= 3.05, < 10 s.
void criterion_factor_three() {
    Criterion c(6, "worst-case factor 3 at desk scale for rho = 2");
    bool pass = true;
    double global_max = 0.0;
    for (std::int64_t l0 : {2, 10}) {
        for (const StrategySpec& spec :
             {StrategySpec::star(l0, 2.0), StrategySpec::times(l0, 2.0)}) {
            LossWalker walker(spec);
            double max_rel = 0.0;
            for (std::int64_t lh = 100; lh <= 1000000; ++lh) {
                const double rel = walker.at(lh).relative_loss;
                const double up = *rel_upper(spec, lh);
                if (rel > up + sweep_slack(up)) pass = false;
                if (rel > max_rel) max_rel = rel;
            }
            if (max_rel > 3.05) pass = false;
            if (max_rel > global_max) global_max = max_rel;
        }
    }
    pass = pass && c.elapsed_seconds() < 10.0;
    c.finish(pass, "max relative loss = " + std::to_string(global_max));
}

// Criterion 7: for the additive and power-law types the per-decade maximum
// relative loss strictly increases over [1e2, 1e6].
void criterion_unboundedness() {
    Criterion c(7, "strict unboundedness witness for plus and pow");
    bool pass = true;
    for (const StrategySpec& spec : {StrategySpec::plus(2, 10), StrategySpec::power(2, 2.0)}) {
        double prev = -1.0;
        for (std::int64_t decade = 100; decade <= 100000; decade *= 10) {
            const double cur = max_relative_loss(spec, decade, decade * 10).first;
            if (cur <= prev) pass = false;
            prev = cur;
        }
    }
    c.finish(pass);
}

// Criterion 8: driver accounting identity, exact integer equality, for 200
// random (spec, lambda_hat, g) combinations.
void criterion_accounting() {
    Criterion c(8, "driver accounting identity total = g*(L + lambda_hat)");
    std::mt19937 rng(41);
    std::uniform_int_distribution<std::int64_t> l0_dist(1, 30);
    std::uniform_int_distribution<std::int64_t> nu_dist(1, 20);
    std::uniform_real_distribution<double> rho_dist(1.05, 5.0);
    std::uniform_real_distribution<double> alpha_dist(1.0, 3.0);
    std::uniform_int_distribution<std::int64_t> lh_off(0, 100000);
    std::uniform_int_distribution<std::int64_t> g_dist(1, 50);
    std::uniform_int_distribution<int> kind_dist(0, 3);

    std::int64_t mismatches = 0;
    int done = 0;
    while (done < 200) {
        const std::int64_t l0 = l0_dist(rng);
        StrategySpec spec;
        switch (kind_dist(rng)) {
            case 0: spec = StrategySpec::plus(l0, nu_dist(rng)); break;
            case 1: spec = StrategySpec::star(l0, rho_dist(rng)); break;
            case 2: spec = StrategySpec::times(l0, rho_dist(rng)); break;
            default: spec = StrategySpec::power(l0, alpha_dist(rng)); break;
        }
        try {
            validate(spec);
        } catch (const InvalidParameter&) {
            continue;
        }
        const std::int64_t lh = l0 + lh_off(rng);
        const std::int64_t g = g_dist(rng);
        const RestartTrace trace = run_restarts(spec, threshold_blackbox(lh, g), 1 << 20);
        if (trace.total_evaluations != g * (loss(spec, lh).loss + lh)) ++mismatches;
        ++done;
    }
    c.finish(mismatches == 0, std::to_string(mismatches) + " mismatches");
}

// Criterion 9: loss_curve equals the independent per-point accumulation
// oracle on 1e5 sampled points across the grid, exact integer equality.
void criterion_oracle_equivalence() {
    Criterion c(9, "loss_curve equals the per-point accumulation oracle");
    std::int64_t mismatches = 0;
    std::int64_t points = 0;
    for (const auto& spec : parameter_grid()) {
        const LossCurve curve = loss_curve(spec, spec.lambda0, spec.lambda0 + 10000, 5);
        for (const auto& p : curve.points) {
            if (p.loss != oracle::alg1_loss(spec, p.lambda_hat)) ++mismatches;
            ++points;
        }
    }
    c.finish(mismatches == 0 && points >= 100000,
             std::to_string(points) + " points, " + std::to_string(mismatches) + " mismatches");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-restartlab-cli>\n";
        return 2;
    }
    criterion_optimal_rho(argv[1]);
    criterion_optimal_nu();
    criterion_sandwich();
    criterion_sawtooth();
    criterion_shared_bound();
    criterion_factor_three();
    criterion_unboundedness();
    criterion_accounting();
    criterion_oracle_equivalence();
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
