#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hawkes/branching.hpp"
#include "hawkes/model.hpp"

namespace hawkes {

struct RunConfig {
    std::string model_path;  // informational; the model is passed explicitly
    double horizon = 1.0;
    std::uint64_t reps = 1;
    bool eta_auto = true;            // tune the tilt before sampling
    std::vector<double> eta;         // used when eta_auto is false
    double eta_tol = 1e-4;           // optimizer bracket width for auto mode
    std::uint64_t seed = 0;
    std::string events_out;          // CSV path, empty = don't write
    std::string summary_out;         // JSON path, empty = don't write
    int threads = 0;                 // 0 = HAWKES_THREADS env or hardware
    std::size_t cluster_cap = kDefaultClusterCap;
};

struct SummaryStats {
    std::vector<double> eta_used;
    std::vector<double> per_direction_mean;
    std::vector<double> ci95_halfwidth;
    double rvs_mean = 0.0;        // events + acceptance uniforms per replication
    double rvs_theoretical = 0.0; // complexity formula at the tilt used
    std::vector<double> acceptance_rate;
    double wall_time_s = 0.0;
    bool degenerate_ci = false; // reps == 1
    std::uint64_t reps = 0;
    double horizon = 0.0;
    std::uint64_t seed = 0;
};

// Runs config.reps independent stationary paths with streams keyed by
// (seed, replication index) and aggregates counts on [0, horizon].
// Output is identical for a fixed (config, seed) at any thread count.
SummaryStats run_replications(const ModelParams& params, const RunConfig& config);

std::string summary_to_json(const SummaryStats& summary);

// The two bundled example models used by the reproduce drivers.
ModelParams symmetric_2d_model();
ModelParams asymmetric_5d_model();

struct SweepRow {
    double eta = 0.0;
    std::vector<double> mean;
    std::vector<double> ci_halfwidth;
    double rvs_mean = 0.0;
    double rvs_theoretical = 0.0;
    double wall_time_s = 0.0;
};

// Tilt sweep on the symmetric 2-d model: one row per eta in
// {0.03, 0.05, 0.06, 0.07, 0.08, 0.09}, each estimated from `reps`
// stationary paths on [0, 1].
std::vector<SweepRow> reproduce_table1(std::uint64_t reps, std::uint64_t seed,
                                       const std::string& csv_path, int threads = 0);

struct MethodRow {
    std::string method;
    std::vector<double> mean;
    std::vector<double> ci_halfwidth;
    double rvs_mean = 0.0;
    double rvs_theoretical = 0.0; // 0 for the naive row
    double wall_time_s = 0.0;
};

// Perfect sampling at the tuned tilt vs naive simulation read off the
// (6, 7] window, both on the 5-d model.
std::vector<MethodRow> reproduce_table2(std::uint64_t reps, std::uint64_t seed,
                                        const std::string& csv_path, int threads = 0);

// Naive per-window intensity estimates on the 5-d model for windows
// (t, t+1], t = 0..9, with the closed-form stationary rates attached.
WindowTable reproduce_figure1(std::uint64_t reps, std::uint64_t seed,
                              const std::string& csv_path, int threads = 0);

// CSV writers shared by the CLI and the reproduce drivers.
void write_window_table_csv(std::ostream& out, const WindowTable& table,
                            const std::vector<double>& stationary_reference = {});
void write_window_table_csv(const std::string& path, const WindowTable& table,
                            const std::vector<double>& stationary_reference = {});

} // namespace hawkes
