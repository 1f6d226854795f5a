#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "hawkes/kernel.hpp"
#include "hawkes/linalg.hpp"
#include "hawkes/model.hpp"
#include "hawkes/rng.hpp"
#include "hawkes/types.hpp"

namespace hawkes {

// Clusters above this size abort with ClusterSizeCapError: a subcritical
// cluster this large means the offspring matrix is nearly critical and the
// caller should be told instead of hung.
inline constexpr std::size_t kDefaultClusterCap = 10'000'000;

// Offspring law driving cluster generation: Poisson means per
// (parent direction, child direction) pair and the tilt level applied to
// birth times. The kernel pointer must outlive the sampler that uses it.
struct EffectiveClusterParams {
    Matrix offspring_means;
    const Kernel* kernel = nullptr;
    double eta = 0.0;
    double spectral_radius = 0.0;
};

// Untilted offspring law of the model (offspring means = hbar).
EffectiveClusterParams untilted_cluster_params(const ModelParams& params);

// Grows one cluster rooted at (immigrant_direction, tau) by breadth-first
// expansion: each processed event draws a Poisson number of children per
// direction, then their birth times. Children whose absolute time exceeds
// `horizon` are dropped together with their entire subtree; birth times are
// always drawn from the full density, never a truncated one, so the law of
// the surviving events is exact. Pass an infinite horizon to get the
// complete cluster (required whenever its length and total birth time feed
// an acceptance test).
Cluster generate_cluster(const EffectiveClusterParams& eff,
                         std::size_t immigrant_direction, double tau,
                         RandomStream& rng,
                         double horizon = std::numeric_limits<double>::infinity(),
                         std::size_t cap = kDefaultClusterCap);

// Transient path on [0, horizon]: immigrants arrive per direction as a
// homogeneous Poisson process and each grows a horizon-pruned cluster.
PathSample simulate_forward(const ModelParams& params, double horizon,
                            RandomStream& rng,
                            std::size_t cap = kDefaultClusterCap);

// Same, with the untilted offspring law precomputed (hot loops).
PathSample simulate_forward(const ModelParams& params,
                            const EffectiveClusterParams& untilted,
                            double horizon, RandomStream& rng,
                            std::size_t cap = kDefaultClusterCap);

// Per-window arrival-rate estimates from repeated forward simulation.
struct WindowTable {
    double window = 0.0;
    std::vector<double> t_start;  // one entry per window
    Matrix mean;                  // windows x directions, counts per unit time
    Matrix ci_halfwidth;          // windows x directions
    double primitive_rvs_mean = 0.0; // primitive draws per replication
    double wall_time_s = 0.0;
};

// Runs `reps` independent forward simulations on [0, horizon] and reports
// the mean arrival rate and 95% half-width on each (t, t + window] slice.
// The horizon must be an integer number of windows.
WindowTable naive_transient_estimate(const ModelParams& params, double horizon,
                                     double window, std::uint64_t reps,
                                     std::uint64_t seed, int threads = 0,
                                     std::size_t cap = kDefaultClusterCap);

} // namespace hawkes
