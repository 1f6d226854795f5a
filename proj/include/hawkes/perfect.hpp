#pragma once

#include <cstddef>
#include <vector>

#include "hawkes/branching.hpp"
#include "hawkes/model.hpp"
#include "hawkes/rng.hpp"
#include "hawkes/tilt.hpp"
#include "hawkes/types.hpp"

namespace hawkes {

// Per-direction tilt machinery precomputed once and shared (read-only)
// across replications. References the model's kernel, which must outlive
// the plan.
struct SamplerPlan {
    std::vector<double> eta;
    std::vector<TiltSolution> solutions;             // solution at eta[i]
    std::vector<EffectiveClusterParams> tilted;      // proposal law per direction
    EffectiveClusterParams untilted;                 // forward-simulation law
};

// Solves the tilt system at every distinct eta_i. Throws TiltTooLargeError
// or InfeasibleTiltError if any coordinate is out of range.
SamplerPlan make_sampler_plan(const ModelParams& params,
                              const std::vector<double>& eta);

// Cluster arrival times on (-inf, 0] for one direction: the count is
// Poisson with the total mass lambda0_i * exp(psi_B_i) / eta_i and each
// arrival is the negative of an Exp(eta_i) draw, which reproduces the
// exponentially decaying rate exactly with no thinning waste.
std::vector<double> sample_cluster_arrivals(double lambda0_i, double psi_B_i,
                                            double eta_i, RandomStream& rng);

// Clusters born before time 0 that survive past 0.
struct ResidueSample {
    std::vector<Cluster> clusters; // accepted, absolute event times
    AcceptanceRecord stats;
};

// Proposes full tilted clusters at the arrivals above and keeps each one
// iff its length passes -tau and a uniform passes the exponential
// acceptance weight. The accepted list follows the exact law of the
// pre-time-0 residue.
ResidueSample sample_N0(const ModelParams& params, const SamplerPlan& plan,
                        RandomStream& rng, std::size_t cap = kDefaultClusterCap);
ResidueSample sample_N0(const ModelParams& params, const std::vector<double>& eta,
                        RandomStream& rng, std::size_t cap = kDefaultClusterCap);

// One exact stationary path on [0, horizon]: events of accepted residue
// clusters falling in the window, merged with a fresh forward simulation.
PathSample sample_stationary_path(const ModelParams& params, const SamplerPlan& plan,
                                  double horizon, RandomStream& rng,
                                  std::size_t cap = kDefaultClusterCap);
PathSample sample_stationary_path(const ModelParams& params,
                                  const std::vector<double>& eta, double horizon,
                                  RandomStream& rng,
                                  std::size_t cap = kDefaultClusterCap);

} // namespace hawkes
