#include "hawkes/branching.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hawkes/errors.hpp"
#include "hawkes/parallel.hpp"
#include "hawkes/stats.hpp"

namespace hawkes {

void AcceptanceRecord::merge(const AcceptanceRecord& other) {
    if (proposed.size() < other.proposed.size()) {
        proposed.resize(other.proposed.size(), 0);
        accepted.resize(other.accepted.size(), 0);
    }
    for (std::size_t i = 0; i < other.proposed.size(); ++i) {
        proposed[i] += other.proposed[i];
        accepted[i] += other.accepted[i];
    }
    events_generated += other.events_generated;
    uniforms_drawn += other.uniforms_drawn;
    primitive_variates += other.primitive_variates;
}

EffectiveClusterParams untilted_cluster_params(const ModelParams& params) {
    check_dimensions(params);
    EffectiveClusterParams eff;
    eff.offspring_means = hbar(params);
    eff.kernel = &params.kernel;
    eff.eta = 0.0;
    eff.spectral_radius = spectral_radius(eff.offspring_means);
    if (eff.spectral_radius >= 1.0) {
        throw UnstableModelError("branching matrix spectral radius " +
                                 std::to_string(eff.spectral_radius) +
                                 " >= 1: clusters are not finite");
    }
    return eff;
}

Cluster generate_cluster(const EffectiveClusterParams& eff,
                         std::size_t immigrant_direction, double tau,
                         RandomStream& rng, double horizon, std::size_t cap) {
    const std::size_t d = eff.offspring_means.rows();
    if (eff.kernel == nullptr || d == 0) {
        throw std::invalid_argument("generate_cluster: cluster parameters not initialized");
    }
    if (immigrant_direction >= d) {
        throw DimensionMismatchError("generate_cluster: immigrant direction out of range");
    }

    Cluster cluster;
    cluster.immigrant_direction = immigrant_direction;
    cluster.tau = tau;
    cluster.events.push_back(Event{1, immigrant_direction, 0, tau, 0.0});

    double last_arrival = tau;
    double total_birth = 0.0;

    // The event list doubles as the FIFO queue: index k scans events in
    // arrival-of-insertion order while children are appended at the back.
    for (std::size_t k = 0; k < cluster.events.size(); ++k) {
        const Event parent = cluster.events[k]; // copy; push_back reallocates
        for (std::size_t j = 0; j < d; ++j) {
            const std::uint64_t n_children =
                rng.poisson(eff.offspring_means(parent.direction, j));
            for (std::uint64_t s = 0; s < n_children; ++s) {
                // Birth times always come from the full density; a child
                // past the horizon is dropped with its whole subtree, which
                // leaves the law of the surviving events exact.
                const double birth =
                    eff.kernel->sample_birth(parent.direction, j, eff.eta, rng);
                const double t = parent.time + birth;
                if (t > horizon) continue;
                if (cluster.events.size() >= cap) {
                    throw ClusterSizeCapError(
                        "cluster exceeded " + std::to_string(cap) +
                        " events; offspring matrix is likely near-critical");
                }
                cluster.events.push_back(
                    Event{cluster.events.size() + 1, j, parent.index, t, birth});
                total_birth += birth;
                last_arrival = std::max(last_arrival, t);
            }
        }
    }

    cluster.length = last_arrival - tau;
    cluster.total_birth = total_birth;
    return cluster;
}

PathSample simulate_forward(const ModelParams& params,
                            const EffectiveClusterParams& untilted,
                            double horizon, RandomStream& rng, std::size_t cap) {
    if (!(horizon > 0.0)) {
        throw std::invalid_argument("simulate_forward: horizon must be positive");
    }
    const std::size_t d = params.dim();
    if (untilted.offspring_means.rows() != d) {
        throw DimensionMismatchError("simulate_forward: offspring law does not match the model");
    }
    PathSample path;
    path.times.resize(d);
    path.residue_stats = AcceptanceRecord(d);
    path.forward_stats = AcceptanceRecord(d);
    const std::uint64_t variates_before = rng.variate_count();

    for (std::size_t i = 0; i < d; ++i) {
        // Immigrants by inversion: a Poisson count, then sorted uniforms.
        const std::uint64_t count = rng.poisson(params.lambda0[i] * horizon);
        std::vector<double> arrivals(count);
        for (auto& t : arrivals) t = rng.uniform() * horizon;
        std::sort(arrivals.begin(), arrivals.end());

        for (const double tau : arrivals) {
            const Cluster cluster = generate_cluster(untilted, i, tau, rng, horizon, cap);
            path.forward_stats.proposed[i] += 1;
            path.forward_stats.accepted[i] += 1;
            path.forward_stats.events_generated += cluster.events.size();
            for (const Event& event : cluster.events) {
                path.times[event.direction].push_back(event.time);
            }
        }
    }
    for (auto& times : path.times) std::sort(times.begin(), times.end());
    path.forward_stats.primitive_variates = rng.variate_count() - variates_before;
    return path;
}

PathSample simulate_forward(const ModelParams& params, double horizon,
                            RandomStream& rng, std::size_t cap) {
    return simulate_forward(params, untilted_cluster_params(params), horizon, rng, cap);
}

WindowTable naive_transient_estimate(const ModelParams& params, double horizon,
                                     double window, std::uint64_t reps,
                                     std::uint64_t seed, int threads,
                                     std::size_t cap) {
    if (!(window > 0.0) || !(horizon > 0.0)) {
        throw std::invalid_argument("naive_transient_estimate: window and horizon must be positive");
    }
    if (reps == 0) {
        throw std::invalid_argument("naive_transient_estimate: need at least one replication");
    }
    const double ratio = horizon / window;
    const std::size_t n_windows = static_cast<std::size_t>(std::llround(ratio));
    if (n_windows == 0 || std::abs(ratio - static_cast<double>(n_windows)) > 1e-9) {
        throw ConfigError("window must divide the horizon evenly");
    }
    require_valid(params);
    const EffectiveClusterParams untilted = untilted_cluster_params(params);
    const std::size_t d = params.dim();

    const auto t0 = std::chrono::steady_clock::now();
    // counts[rep] holds n_windows x d event counts, flattened.
    std::vector<std::vector<std::uint32_t>> counts(reps);
    std::vector<double> primitive(reps, 0.0);
    parallel_for_reps(reps, resolve_threads(threads), [&](std::uint64_t rep) {
        RandomStream stream(seed, rep);
        const PathSample path = simulate_forward(params, untilted, horizon, stream, cap);
        std::vector<std::uint32_t> binned(n_windows * d, 0);
        for (std::size_t j = 0; j < d; ++j) {
            for (const double t : path.times[j]) {
                auto w = static_cast<std::size_t>(t / window);
                if (w >= n_windows) w = n_windows - 1;
                binned[w * d + j] += 1;
            }
        }
        counts[rep] = std::move(binned);
        primitive[rep] = static_cast<double>(path.forward_stats.primitive_variates);
    });

    WindowTable table;
    table.window = window;
    table.t_start.resize(n_windows);
    table.mean = Matrix(n_windows, d);
    table.ci_halfwidth = Matrix(n_windows, d);
    std::vector<double> samples(reps);
    for (std::size_t w = 0; w < n_windows; ++w) {
        table.t_start[w] = static_cast<double>(w) * window;
        for (std::size_t j = 0; j < d; ++j) {
            for (std::uint64_t r = 0; r < reps; ++r) {
                samples[r] = counts[r][w * d + j] / window;
            }
            const MeanCI ci = ci95(samples);
            table.mean(w, j) = ci.mean;
            table.ci_halfwidth(w, j) = ci.halfwidth;
        }
    }
    table.primitive_rvs_mean = ci95(primitive).mean;
    table.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return table;
}

} // namespace hawkes
