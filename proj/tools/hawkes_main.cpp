// Command-line front end: validation, c.g.f. inspection, tilt tuning,
// stationary sampling, the naive transient baseline, and the bundled
// experiment reproductions.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hawkes/errors.hpp"
#include "hawkes/harness.hpp"
#include "hawkes/model_io.hpp"
#include "hawkes/optimize.hpp"
#include "hawkes/tilt.hpp"

namespace {

using namespace hawkes;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitUnstable = 4;

std::vector<double> parse_eta(const std::string& text, std::size_t dim) {
    std::vector<double> eta;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            eta.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw ConfigError("cannot parse eta entry '" + item + "'");
        }
    }
    if (eta.size() == 1 && dim > 1) {
        eta.assign(dim, eta.front()); // one value tilts every direction
    }
    if (eta.size() != dim) {
        throw ConfigError("eta needs " + std::to_string(dim) +
                          " comma-separated entries (or a single shared value)");
    }
    return eta;
}

int cmd_validate(const std::string& config_path) {
    const ModelParams params = load_model(config_path);
    const ValidationReport report = validate_model(params);
    nlohmann::json doc;
    doc["ok"] = report.ok;
    doc["spectral_radius"] = report.spectral_radius;
    doc["lambda0_positive"] = report.lambda0_positive;
    doc["kernel_nonnegative"] = report.kernel_nonnegative;
    doc["stable"] = report.stable;
    doc["eta_feasible_max"] = report.eta_feasible_max;
    doc["issues"] = report.issues;
    std::cout << doc.dump(2) << '\n';
    if (report.ok) return kExitOk;
    return report.lambda0_positive && report.kernel_nonnegative ? kExitUnstable
                                                                : kExitConfig;
}

int cmd_cgf(const std::string& config_path, double theta) {
    const ModelParams params = load_model(config_path);
    require_valid(params);
    const TiltSolution sol = solve_psi_B(params, theta);
    nlohmann::json doc;
    doc["theta"] = theta;
    doc["feasible"] = sol.feasible;
    if (sol.feasible) {
        doc["psi_B"] = sol.psi_B;
        doc["psi_f"] = sol.psi_f.to_rows();
        doc["h_tilde"] = sol.h_tilde.to_rows();
        doc["s_tilde_rowsums"] = sol.s_tilde_rowsums;
        if (theta > 0.0) {
            doc["X"] = complexity_X(params, std::vector<double>(params.dim(), theta));
        }
    }
    std::cout << doc.dump(2) << '\n';
    if (!sol.feasible) {
        throw InfeasibleTiltError("tilt " + std::to_string(theta) +
                                  " is beyond the feasibility boundary");
    }
    return kExitOk;
}

int cmd_optimize(const std::string& config_path, double tol) {
    const ModelParams params = load_model(config_path);
    const OptimizeResult result = optimize_eta(params, tol);
    nlohmann::json doc;
    doc["eta_star"] = result.eta_star;
    doc["X_at_eta_star"] = result.X_at_eta_star;
    doc["theta0"] = result.theta0;
    doc["boundary"] = result.boundary;
    std::cout << doc.dump(2) << '\n';
    return kExitOk;
}

int cmd_sample(const std::string& config_path, const RunConfig& base,
               const std::string& eta_text, double eta_tol) {
    const ModelParams params = load_model(config_path);
    RunConfig config = base;
    config.model_path = config_path;
    config.eta_tol = eta_tol;
    if (eta_text == "auto") {
        config.eta_auto = true;
    } else {
        config.eta_auto = false;
        config.eta = parse_eta(eta_text, params.dim());
    }
    const SummaryStats summary = run_replications(params, config);
    std::cout << summary_to_json(summary) << '\n';
    return kExitOk;
}

int cmd_naive(const std::string& config_path, double horizon, double window,
              std::uint64_t reps, std::uint64_t seed, const std::string& out,
              int threads) {
    const ModelParams params = load_model(config_path);
    const WindowTable table =
        naive_transient_estimate(params, horizon, window, reps, seed, threads);
    if (out.empty()) {
        write_window_table_csv(std::cout, table);
    } else {
        write_window_table_csv(out, table);
        std::fprintf(stderr, "wrote %s\n", out.c_str());
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact stationary sampling of mutually exciting point processes"};
    app.require_subcommand(1);

    std::string config_path;
    double theta = 0.0;
    double tol = 1e-4;
    std::string eta_text = "auto";
    RunConfig run;
    double window = 1.0;
    std::string out_csv;

    auto* validate = app.add_subcommand("validate", "Check a model config");
    validate->add_option("--config", config_path, "model JSON")->required();

    auto* cgf = app.add_subcommand("cgf", "Solve the birth-time c.g.f. system at a tilt");
    cgf->add_option("--config", config_path, "model JSON")->required();
    cgf->add_option("--theta", theta, "tilt level")->required();

    auto* optimize = app.add_subcommand("optimize-eta", "Tune the tilt vector");
    optimize->add_option("--config", config_path, "model JSON")->required();
    optimize->add_option("--tol", tol, "bracket width per coordinate")->capture_default_str();

    auto* sample = app.add_subcommand("sample", "Draw exact stationary paths");
    sample->add_option("--config", config_path, "model JSON")->required();
    sample->add_option("--horizon", run.horizon, "path length")->capture_default_str();
    sample->add_option("--reps", run.reps, "replications")->capture_default_str();
    sample->add_option("--eta", eta_text, "'auto' or comma-separated tilts")->capture_default_str();
    sample->add_option("--eta-tol", tol, "optimizer tolerance for auto mode")->capture_default_str();
    sample->add_option("--seed", run.seed, "master seed")->capture_default_str();
    sample->add_option("--out", run.events_out, "events CSV path");
    sample->add_option("--summary", run.summary_out, "summary JSON path");
    sample->add_option("--threads", run.threads, "worker count (0 = auto)")->capture_default_str();
    sample->add_option("--cap", run.cluster_cap, "per-cluster event cap")->capture_default_str();

    std::uint64_t naive_reps = 10000, naive_seed = 0;
    int naive_threads = 0;
    double naive_horizon = 7.0;
    auto* naive = app.add_subcommand("naive", "Transient window estimates by forward simulation");
    naive->add_option("--config", config_path, "model JSON")->required();
    naive->add_option("--horizon", naive_horizon, "simulation length")->capture_default_str();
    naive->add_option("--window", window, "window width")->capture_default_str();
    naive->add_option("--reps", naive_reps, "replications")->capture_default_str();
    naive->add_option("--seed", naive_seed, "master seed")->capture_default_str();
    naive->add_option("--out", out_csv, "CSV path (stdout when omitted)");
    naive->add_option("--threads", naive_threads, "worker count (0 = auto)")->capture_default_str();

    std::uint64_t rep_reps = 10000, rep_seed = 42;
    int rep_threads = 0;
    std::string rep_out;
    auto add_repro = [&](const char* name, const char* help) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("--reps", rep_reps, "replications")->capture_default_str();
        cmd->add_option("--seed", rep_seed, "master seed")->capture_default_str();
        cmd->add_option("--out", rep_out, "CSV path");
        cmd->add_option("--threads", rep_threads, "worker count (0 = auto)")->capture_default_str();
        return cmd;
    };
    auto* table1 = add_repro("reproduce-table1", "Tilt sweep on the bundled 2-d model");
    auto* table2 = add_repro("reproduce-table2", "Perfect-vs-naive comparison on the bundled 5-d model");
    auto* figure1 = add_repro("reproduce-figure1", "Transient window series on the bundled 5-d model");

    try {
        app.parse(argc, argv);

        if (validate->parsed()) return cmd_validate(config_path);
        if (cgf->parsed()) return cmd_cgf(config_path, theta);
        if (optimize->parsed()) return cmd_optimize(config_path, tol);
        if (sample->parsed()) return cmd_sample(config_path, run, eta_text, tol);
        if (naive->parsed()) {
            return cmd_naive(config_path, naive_horizon, window, naive_reps,
                             naive_seed, out_csv, naive_threads);
        }
        if (table1->parsed()) {
            if (rep_out.empty()) rep_out = "table1.csv";
            reproduce_table1(rep_reps, rep_seed, rep_out, rep_threads);
            std::fprintf(stderr, "wrote %s\n", rep_out.c_str());
            return kExitOk;
        }
        if (table2->parsed()) {
            if (rep_out.empty()) rep_out = "table2.csv";
            reproduce_table2(rep_reps, rep_seed, rep_out, rep_threads);
            std::fprintf(stderr, "wrote %s\n", rep_out.c_str());
            return kExitOk;
        }
        if (figure1->parsed()) {
            if (rep_out.empty()) rep_out = "figure1.csv";
            reproduce_figure1(rep_reps, rep_seed, rep_out, rep_threads);
            std::fprintf(stderr, "wrote %s\n", rep_out.c_str());
            return kExitOk;
        }
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? kExitOk : kExitConfig;
    } catch (const ConfigError& err) {
        std::fprintf(stderr, "config error: %s\n", err.what());
        return kExitConfig;
    } catch (const DimensionMismatchError& err) {
        std::fprintf(stderr, "config error: %s\n", err.what());
        return kExitConfig;
    } catch (const TiltTooLargeError& err) {
        std::fprintf(stderr, "infeasible tilt: %s\n", err.what());
        return kExitInfeasible;
    } catch (const InfeasibleTiltError& err) {
        std::fprintf(stderr, "infeasible tilt: %s\n", err.what());
        return kExitInfeasible;
    } catch (const UnstableModelError& err) {
        std::fprintf(stderr, "unstable model: %s\n", err.what());
        return kExitUnstable;
    } catch (const std::exception& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return 1;
    }
    return kExitOk;
}
