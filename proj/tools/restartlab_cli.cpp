// Command-line front end: loss curves, bound verification sweeps, restart
// parameter optimization, and driving the threshold oracle. Emits CSV/JSON.

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "restartlab/restartlab.hpp"

using json = nlohmann::ordered_json;
namespace rl = restartlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

// Shortest representation that parses back to the identical double.
std::string fmt_double(double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

unsigned env_threads() {
    const char* raw = std::getenv("RESTARTLAB_THREADS");
    if (raw == nullptr) return 0;
    const long parsed = std::strtol(raw, nullptr, 10);
    return parsed > 0 ? static_cast<unsigned>(parsed) : 0;
}

// Spec flags shared by the loss, verify and drive subcommands.
struct SpecArgs {
    std::string type;
    std::int64_t lambda0 = 1;
    std::optional<std::int64_t> nu;
    std::optional<double> rho;
    std::optional<double> alpha;

    void attach(CLI::App* cmd) {
        cmd->add_option("--type", type, "strategy type")
            ->required()
            ->check(CLI::IsMember({"plus", "star", "times", "pow"}));
        cmd->add_option("--lambda0", lambda0, "start value")->required();
        cmd->add_option("--nu", nu, "additive restart parameter (plus)");
        cmd->add_option("--rho", rho, "multiplicative restart parameter (star/times)");
        cmd->add_option("--alpha", alpha, "power-law restart parameter (pow)");
    }

    rl::StrategySpec build() const {
        const int given = (nu ? 1 : 0) + (rho ? 1 : 0) + (alpha ? 1 : 0);
        if (given != 1) {
            throw rl::InvalidParameter("parameter", "give exactly one of --nu, --rho, --alpha");
        }
        rl::StrategySpec spec;
        if (type == "plus") {
            if (!nu) throw rl::InvalidParameter("nu", "plus requires --nu");
            spec = rl::StrategySpec::plus(lambda0, *nu);
        } else if (type == "star" || type == "times") {
            if (!rho) throw rl::InvalidParameter("rho", type + " requires --rho");
            spec = type == "star" ? rl::StrategySpec::star(lambda0, *rho)
                                  : rl::StrategySpec::times(lambda0, *rho);
        } else {
            if (!alpha) throw rl::InvalidParameter("alpha", "pow requires --alpha");
            spec = rl::StrategySpec::power(lambda0, *alpha);
        }
        return rl::validate(spec);
    }
};

json spec_to_json(const rl::StrategySpec& spec) {
    json j;
    j["type"] = rl::to_string(spec.kind);
    j["lambda0"] = spec.lambda0;
    switch (spec.kind) {
        case rl::StrategyKind::Plus: j["nu"] = spec.nu; break;
        case rl::StrategyKind::Star:
        case rl::StrategyKind::Times: j["rho"] = spec.rho; break;
        case rl::StrategyKind::Pow: j["alpha"] = spec.alpha; break;
    }
    return j;
}

// Writes the payload atomically when --out is given, else to stdout.
void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    namespace fs = std::filesystem;
    const fs::path target(out_path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream stream(tmp, std::ios::binary | std::ios::trunc);
        if (!stream) throw rl::Error("cannot open " + tmp.string());
        stream << payload;
    }
    fs::rename(tmp, target);
}

struct LossOptions {
    SpecArgs spec;
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    std::int64_t stride = 1;
    std::string format = "csv";
    bool with_bounds = false;
    std::string out;
};

int run_loss(const LossOptions& opt) {
    const rl::StrategySpec spec = opt.spec.build();
    const rl::LossCurve curve = rl::loss_curve(spec, opt.lo, opt.hi, opt.stride);

    std::string payload;
    if (opt.format == "csv") {
        std::ostringstream csv;
        csv << "lambda_hat,k_hat,loss,rel_loss";
        if (opt.with_bounds) csv << ",loss_lower,loss_upper";
        csv << "\n";
        for (const auto& p : curve.points) {
            csv << p.lambda_hat << ',' << p.k_hat << ',' << p.loss << ','
                << fmt_double(p.relative_loss);
            if (opt.with_bounds) {
                csv << ',' << fmt_double(rl::loss_lower(spec, p.lambda_hat)) << ','
                    << fmt_double(rl::loss_upper(spec, p.lambda_hat));
            }
            csv << "\n";
        }
        payload = csv.str();
    } else {
        json j;
        j["schema_version"] = 1;
        j["command"] = "loss";
        j["spec"] = spec_to_json(spec);
        j["rows"] = json::array();
        for (const auto& p : curve.points) {
            json row;
            row["lambda_hat"] = p.lambda_hat;
            row["k_hat"] = p.k_hat;
            row["loss"] = p.loss;
            row["rel_loss"] = p.relative_loss;
            if (opt.with_bounds) {
                row["loss_lower"] = rl::loss_lower(spec, p.lambda_hat);
                row["loss_upper"] = rl::loss_upper(spec, p.lambda_hat);
            }
            j["rows"].push_back(row);
        }
        payload = j.dump(2) + "\n";
    }
    emit(opt.out, payload);
    return kExitOk;
}

struct VerifyOptions {
    SpecArgs spec;
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    std::string check = "all";
    double perturb_upper = 0.0;
    std::string out;
};

int run_verify(const VerifyOptions& opt) {
    const rl::StrategySpec spec = opt.spec.build();
    const unsigned threads = env_threads();

    rl::SweepReport report;
    const bool all = opt.check == "all";
    if (all || opt.check == "sandwich") {
        if (opt.perturb_upper != 0.0) {
            report.merge(
                rl::sandwich_sweep_perturbed(spec, opt.lo, opt.hi, opt.perturb_upper, threads));
        } else {
            report.merge(rl::sandwich_sweep(spec, opt.lo, opt.hi, threads));
        }
    }
    if (all || opt.check == "sawtooth") {
        report.merge(rl::sawtooth_sweep(spec, opt.lo, opt.hi));
    }
    if (all || opt.check == "nesting") {
        if (spec.kind != rl::StrategyKind::Star && spec.kind != rl::StrategyKind::Times) {
            if (!all) {
                throw rl::InvalidParameter("check", "nesting applies to star/times only");
            }
        } else {
            report.merge(
                rl::star_times_nesting(spec.lambda0, spec.rho, rl::restarts_needed(spec, opt.hi)));
        }
    }

    json j;
    j["schema_version"] = 1;
    j["command"] = "verify";
    j["spec"] = spec_to_json(spec);
    j["check"] = opt.check;
    j["lo"] = opt.lo;
    j["hi"] = opt.hi;
    j["checks_run"] = report.checks_run;
    j["violations"] = json::array();
    for (const auto& v : report.violations) {
        json vi;
        vi["check"] = v.check;
        vi["lambda_hat"] = v.lambda_hat;
        vi["observed"] = v.observed;
        vi["bound"] = v.bound;
        j["violations"].push_back(vi);
    }
    emit(opt.out, j.dump(2) + "\n");
    return report.ok() ? kExitOk : kExitCheckFailed;
}

struct OptimizeOptions {
    std::string target;
    std::int64_t lambda0 = 1;
    std::int64_t lambda_hat = 0;
    double tol = 1e-8;
    std::string out;
};

int run_optimize(const OptimizeOptions& opt) {
    json j;
    j["schema_version"] = 1;
    j["command"] = "optimize";
    j["target"] = opt.target;
    if (opt.target == "nu") {
        const double nu_opt = rl::optimal_nu(opt.lambda0, opt.lambda_hat);
        const double lh = static_cast<double>(opt.lambda_hat);
        const double l0 = static_cast<double>(opt.lambda0);
        // Additive upper loss bound evaluated at the real-valued minimizer.
        j["optimum"] = nu_opt;
        j["objective_value"] =
            0.5 * (lh - l0 - 1.0) * ((lh + l0 - 1.0) / nu_opt + 1.0) + l0 + nu_opt - 1.0;
    } else {
        const auto [rho_hat, objective] = rl::optimal_rho();
        const rl::RhoMinimum numeric = rl::minimize_asymptotic_upper(1.01, 10.0, opt.tol);
        j["optimum"] = rho_hat;
        j["objective_value"] = objective;
        j["numeric_optimum"] = numeric.rho;
        j["numeric_objective"] = numeric.value;
        j["interior"] = numeric.interior;
    }
    emit(opt.out, j.dump(2) + "\n");
    return kExitOk;
}

struct DriveOptions {
    SpecArgs spec;
    std::int64_t oracle_lambda_hat = 0;
    std::int64_t gens = 1;
    std::int64_t k_cap = 64;
    std::string out;
};

int run_drive(const DriveOptions& opt) {
    const rl::StrategySpec spec = opt.spec.build();
    json j;
    j["schema_version"] = 1;
    j["command"] = "drive";
    j["spec"] = spec_to_json(spec);
    j["oracle_lambda_hat"] = opt.oracle_lambda_hat;
    j["gens"] = opt.gens;

    const rl::BlackBox oracle = rl::threshold_blackbox(opt.oracle_lambda_hat, opt.gens);
    try {
        const rl::RestartTrace trace = rl::run_restarts(spec, oracle, opt.k_cap);
        j["runs"] = json::array();
        for (const auto& run : trace.runs) {
            json r;
            r["k"] = run.k;
            r["lambda"] = run.lambda;
            r["evaluations"] = run.evaluations;
            r["success"] = run.success;
            j["runs"].push_back(r);
        }
        j["total_evaluations"] = trace.total_evaluations;
        j["succeeded"] = trace.succeeded;
        if (opt.oracle_lambda_hat >= spec.lambda0) {
            j["predicted_total"] =
                opt.gens * (rl::loss(spec, opt.oracle_lambda_hat).loss + opt.oracle_lambda_hat);
        }
        emit(opt.out, j.dump(2) + "\n");
        return kExitOk;
    } catch (const rl::CapExceeded& e) {
        j["succeeded"] = false;
        j["error"] = "cap_exceeded";
        j["k_cap"] = e.k_cap();
        emit(opt.out, j.dump(2) + "\n");
        return kExitCheckFailed;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"restart strategy loss curves, bound verification and parameter optimization"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "restartlab 0.1.0");

    LossOptions loss_opt;
    auto* loss_cmd = app.add_subcommand("loss", "emit exact loss over a lambda_hat range");
    loss_opt.spec.attach(loss_cmd);
    loss_cmd->add_option("--lo", loss_opt.lo, "range start")->required();
    loss_cmd->add_option("--hi", loss_opt.hi, "range end (inclusive)")->required();
    loss_cmd->add_option("--stride", loss_opt.stride, "sampling stride");
    loss_cmd->add_option("--format", loss_opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    loss_cmd->add_flag("--bounds", loss_opt.with_bounds, "include bound columns");
    loss_cmd->add_option("--out", loss_opt.out, "write atomically to this file");

    VerifyOptions verify_opt;
    auto* verify_cmd = app.add_subcommand("verify", "sweep-check the bound theorems");
    verify_opt.spec.attach(verify_cmd);
    verify_cmd->add_option("--lo", verify_opt.lo, "range start")->required();
    verify_cmd->add_option("--hi", verify_opt.hi, "range end (inclusive)")->required();
    verify_cmd->add_option("--check", verify_opt.check, "which checks to run")
        ->check(CLI::IsMember({"sandwich", "sawtooth", "nesting", "all"}));
#ifndef NDEBUG
    verify_cmd->add_option("--perturb-upper", verify_opt.perturb_upper,
                           "debug hook: shift the upper bound before checking");
#endif
    verify_cmd->add_option("--out", verify_opt.out, "write atomically to this file");

    OptimizeOptions optimize_opt;
    auto* optimize_cmd = app.add_subcommand("optimize", "optimal restart parameters");
    optimize_cmd->add_option("--target", optimize_opt.target, "nu or rho")
        ->required()
        ->check(CLI::IsMember({"nu", "rho"}));
    optimize_cmd->add_option("--lambda0", optimize_opt.lambda0, "start value (nu)");
    optimize_cmd->add_option("--lambda-hat", optimize_opt.lambda_hat, "optimal lambda (nu)");
    optimize_cmd->add_option("--tol", optimize_opt.tol, "bracket tolerance (rho)");
    optimize_cmd->add_option("--out", optimize_opt.out, "write atomically to this file");

    DriveOptions drive_opt;
    auto* drive_cmd = app.add_subcommand("drive", "drive the threshold oracle to success");
    drive_opt.spec.attach(drive_cmd);
    drive_cmd->add_option("--oracle-lambda-hat", drive_opt.oracle_lambda_hat, "oracle threshold")
        ->required();
    drive_cmd->add_option("--gens", drive_opt.gens, "generations per run")->required();
    drive_cmd->add_option("--k-cap", drive_opt.k_cap, "maximum number of runs");
    drive_cmd->add_option("--out", drive_opt.out, "write atomically to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help / --version
        }
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (loss_cmd->parsed()) return run_loss(loss_opt);
        if (verify_cmd->parsed()) return run_verify(verify_opt);
        if (optimize_cmd->parsed()) return run_optimize(optimize_opt);
        if (drive_cmd->parsed()) return run_drive(drive_opt);
    } catch (const rl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
