#include "hawkes/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "hawkes/errors.hpp"
#include "hawkes/optimize.hpp"
#include "hawkes/parallel.hpp"
#include "hawkes/perfect.hpp"
#include "hawkes/stats.hpp"
#include "hawkes/tilt.hpp"

namespace hawkes {

namespace {

// 12 significant digits for statistics tables.
std::string fmt_sig(double v) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.12g", v);
    return buffer;
}

// Fixed 12-digit precision for event times.
std::string fmt_fixed(double v) {
    char buffer[48];
    std::snprintf(buffer, sizeof(buffer), "%.12f", v);
    return buffer;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw ConfigError("cannot open output file '" + path + "'");
    }
    return out;
}

} // namespace

SummaryStats run_replications(const ModelParams& params, const RunConfig& config) {
    if (config.reps == 0) {
        throw ConfigError("reps must be at least 1");
    }
    if (!(config.horizon > 0.0)) {
        throw ConfigError("horizon must be positive");
    }
    require_valid(params);
    const std::size_t d = params.dim();

    std::vector<double> eta;
    if (config.eta_auto) {
        eta = optimize_eta(params, config.eta_tol).eta_star;
    } else {
        eta = config.eta;
        if (eta.size() != d) {
            throw ConfigError("eta has " + std::to_string(eta.size()) +
                              " entries for a " + std::to_string(d) +
                              "-dimensional model");
        }
    }
    const SamplerPlan plan = make_sampler_plan(params, eta);
    const double rvs_theoretical = complexity_X(params, eta);

    // Open the outputs up front so a bad path fails before the run, not after.
    const bool keep_events = !config.events_out.empty();
    std::ofstream events_file;
    if (keep_events) events_file = open_output(config.events_out);
    std::ofstream summary_file;
    if (!config.summary_out.empty()) summary_file = open_output(config.summary_out);

    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t reps = config.reps;
    std::vector<double> counts(reps * d, 0.0);
    std::vector<double> rv_metric(reps, 0.0);
    std::vector<AcceptanceRecord> records(reps);
    std::vector<std::string> event_rows(keep_events ? reps : 0);

    parallel_for_reps(reps, resolve_threads(config.threads), [&](std::uint64_t rep) {
        RandomStream stream(config.seed, rep);
        const PathSample path =
            sample_stationary_path(params, plan, config.horizon, stream,
                                   config.cluster_cap);
        for (std::size_t j = 0; j < d; ++j) {
            counts[rep * d + j] = static_cast<double>(path.times[j].size());
        }
        rv_metric[rep] = static_cast<double>(path.residue_stats.rv_total());
        records[rep] = path.residue_stats;
        if (keep_events) {
            std::string rows;
            for (std::size_t j = 0; j < d; ++j) {
                for (const double t : path.times[j]) {
                    rows += std::to_string(rep);
                    rows += ',';
                    rows += std::to_string(j + 1);
                    rows += ',';
                    rows += fmt_fixed(t);
                    rows += '\n';
                }
            }
            event_rows[rep] = std::move(rows);
        }
    });

    SummaryStats summary;
    summary.eta_used = eta;
    summary.reps = reps;
    summary.horizon = config.horizon;
    summary.seed = config.seed;
    summary.rvs_theoretical = rvs_theoretical;
    summary.per_direction_mean.resize(d);
    summary.ci95_halfwidth.resize(d);
    std::vector<double> column(reps);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::uint64_t r = 0; r < reps; ++r) column[r] = counts[r * d + j];
        const MeanCI ci = ci95(column);
        summary.per_direction_mean[j] = ci.mean;
        summary.ci95_halfwidth[j] = ci.halfwidth;
        summary.degenerate_ci = ci.degenerate;
    }
    summary.rvs_mean = ci95(rv_metric).mean;

    AcceptanceRecord totals(d);
    for (const auto& record : records) totals.merge(record);
    summary.acceptance_rate.resize(d);
    for (std::size_t j = 0; j < d; ++j) {
        summary.acceptance_rate[j] =
            totals.proposed[j] == 0
                ? 0.0
                : static_cast<double>(totals.accepted[j]) /
                      static_cast<double>(totals.proposed[j]);
    }
    summary.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (keep_events) {
        events_file << "rep_id,direction,time\n";
        for (const std::string& rows : event_rows) events_file << rows;
    }
    if (summary_file.is_open()) {
        summary_file << summary_to_json(summary) << '\n';
    }
    return summary;
}

std::string summary_to_json(const SummaryStats& summary) {
    nlohmann::json doc;
    doc["per_direction_mean"] = summary.per_direction_mean;
    doc["ci95_halfwidth"] = summary.ci95_halfwidth;
    doc["rvs_mean"] = summary.rvs_mean;
    doc["rvs_theoretical"] = summary.rvs_theoretical;
    doc["acceptance_rate"] = summary.acceptance_rate;
    doc["wall_time_s"] = summary.wall_time_s;
    doc["eta"] = summary.eta_used;
    doc["reps"] = summary.reps;
    doc["horizon"] = summary.horizon;
    doc["seed"] = summary.seed;
    doc["degenerate_ci"] = summary.degenerate_ci;
    return doc.dump(2);
}

ModelParams symmetric_2d_model() {
    ModelParams params;
    params.lambda0 = {1.0, 1.0};
    params.kernel = ExponentialKernel(Matrix::from_rows({{1.0, 2.0}, {2.0, 1.0}}),
                                      Matrix::from_rows({{2.0, 8.0}, {8.0, 2.0}}));
    return params;
}

ModelParams asymmetric_5d_model() {
    ModelParams params;
    params.lambda0 = {0.1, 0.2, 0.1, 0.3, 0.4};
    params.kernel = ExponentialKernel(
        Matrix::from_rows({{0.8, 0.8, 0.2, 0.8, 1.0},
                           {0.8, 0.1, 0.9, 0.1, 0.5},
                           {0.5, 0.6, 0.7, 0.5, 0.3},
                           {0.2, 0.9, 0.9, 0.7, 0.4},
                           {0.3, 0.2, 0.2, 0.9, 1.1}}),
        Matrix::from_rows({{4.9, 4.1, 4.9, 3.3, 3.3},
                           {3.3, 4.1, 4.9, 1.7, 3.3},
                           {7.3, 5.7, 4.9, 7.3, 5.7},
                           {0.9, 5.7, 2.5, 8.1, 7.3},
                           {6.5, 3.3, 3.3, 7.3, 4.9}}));
    return params;
}

std::vector<SweepRow> reproduce_table1(std::uint64_t reps, std::uint64_t seed,
                                       const std::string& csv_path, int threads) {
    const ModelParams params = symmetric_2d_model();
    const std::vector<double> etas = {0.03, 0.05, 0.06, 0.07, 0.08, 0.09};

    std::vector<SweepRow> rows;
    rows.reserve(etas.size());
    std::uint64_t row_index = 0;
    for (const double eta : etas) {
        RunConfig config;
        config.horizon = 1.0;
        config.reps = reps;
        config.eta_auto = false;
        config.eta = {eta, eta};
        config.seed = seed + 1000003 * row_index++;
        config.threads = threads;
        const SummaryStats summary = run_replications(params, config);
        rows.push_back(SweepRow{eta, summary.per_direction_mean,
                                summary.ci95_halfwidth, summary.rvs_mean,
                                summary.rvs_theoretical, summary.wall_time_s});
    }

    if (!csv_path.empty()) {
        std::ofstream out = open_output(csv_path);
        out << "eta";
        for (std::size_t j = 0; j < params.dim(); ++j) {
            out << ",mean_" << (j + 1) << ",ci95_" << (j + 1);
        }
        out << ",rvs_mean,rvs_theoretical,wall_time_s\n";
        for (const SweepRow& row : rows) {
            out << fmt_sig(row.eta);
            for (std::size_t j = 0; j < row.mean.size(); ++j) {
                out << ',' << fmt_sig(row.mean[j]) << ',' << fmt_sig(row.ci_halfwidth[j]);
            }
            out << ',' << fmt_sig(row.rvs_mean) << ',' << fmt_sig(row.rvs_theoretical)
                << ',' << fmt_sig(row.wall_time_s) << '\n';
        }
    }
    return rows;
}

std::vector<MethodRow> reproduce_table2(std::uint64_t reps, std::uint64_t seed,
                                        const std::string& csv_path, int threads) {
    const ModelParams params = asymmetric_5d_model();

    RunConfig config;
    config.horizon = 1.0;
    config.reps = reps;
    config.eta_auto = true;
    config.eta_tol = 1e-4;
    config.seed = seed;
    config.threads = threads;
    const SummaryStats perfect = run_replications(params, config);

    // Naive baseline: simulate past the burn-in implied by the transient
    // plots and read counts off the last unit window.
    const double burn_horizon = 7.0;
    const WindowTable naive = naive_transient_estimate(params, burn_horizon, 1.0,
                                                       reps, seed + 777, threads);
    const std::size_t last = naive.t_start.size() - 1;
    const std::size_t d = params.dim();

    std::vector<MethodRow> rows(2);
    rows[0].method = "perfect";
    rows[0].mean = perfect.per_direction_mean;
    rows[0].ci_halfwidth = perfect.ci95_halfwidth;
    rows[0].rvs_mean = perfect.rvs_mean;
    rows[0].rvs_theoretical = perfect.rvs_theoretical;
    rows[0].wall_time_s = perfect.wall_time_s;
    rows[1].method = "naive";
    rows[1].mean.resize(d);
    rows[1].ci_halfwidth.resize(d);
    for (std::size_t j = 0; j < d; ++j) {
        rows[1].mean[j] = naive.mean(last, j);
        rows[1].ci_halfwidth[j] = naive.ci_halfwidth(last, j);
    }
    rows[1].rvs_mean = naive.primitive_rvs_mean;
    rows[1].rvs_theoretical = 0.0;
    rows[1].wall_time_s = naive.wall_time_s;

    if (!csv_path.empty()) {
        std::ofstream out = open_output(csv_path);
        out << "method";
        for (std::size_t j = 0; j < d; ++j) {
            out << ",mean_" << (j + 1) << ",ci95_" << (j + 1);
        }
        out << ",rvs_mean,rvs_theoretical,wall_time_s\n";
        for (const MethodRow& row : rows) {
            out << row.method;
            for (std::size_t j = 0; j < d; ++j) {
                out << ',' << fmt_sig(row.mean[j]) << ',' << fmt_sig(row.ci_halfwidth[j]);
            }
            out << ',' << fmt_sig(row.rvs_mean) << ',' << fmt_sig(row.rvs_theoretical)
                << ',' << fmt_sig(row.wall_time_s) << '\n';
        }
    }
    return rows;
}

WindowTable reproduce_figure1(std::uint64_t reps, std::uint64_t seed,
                              const std::string& csv_path, int threads) {
    const ModelParams params = asymmetric_5d_model();
    const WindowTable table =
        naive_transient_estimate(params, 10.0, 1.0, reps, seed, threads);
    if (!csv_path.empty()) {
        write_window_table_csv(csv_path, table, stationary_intensity(params));
    }
    return table;
}

void write_window_table_csv(const std::string& path, const WindowTable& table,
                            const std::vector<double>& stationary_reference) {
    std::ofstream out = open_output(path);
    write_window_table_csv(out, table, stationary_reference);
}

void write_window_table_csv(std::ostream& out, const WindowTable& table,
                            const std::vector<double>& stationary_reference) {
    const bool with_reference = !stationary_reference.empty();
    out << "t_start,direction,mean,ci_halfwidth";
    if (with_reference) out << ",stationary";
    out << '\n';
    for (std::size_t w = 0; w < table.t_start.size(); ++w) {
        for (std::size_t j = 0; j < table.mean.cols(); ++j) {
            out << fmt_sig(table.t_start[w]) << ',' << (j + 1) << ','
                << fmt_sig(table.mean(w, j)) << ',' << fmt_sig(table.ci_halfwidth(w, j));
            if (with_reference) out << ',' << fmt_sig(stationary_reference[j]);
            out << '\n';
        }
    }
}

} // namespace hawkes
