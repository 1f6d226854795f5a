#include "hawkes/perfect.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hawkes/errors.hpp"

namespace hawkes {

std::vector<double> sample_cluster_arrivals(double lambda0_i, double psi_B_i,
                                            double eta_i, RandomStream& rng) {
    if (!(eta_i > 0.0)) {
        throw std::invalid_argument("sample_cluster_arrivals: eta must be positive");
    }
    if (!std::isfinite(psi_B_i) || !(lambda0_i > 0.0)) {
        throw std::invalid_argument("sample_cluster_arrivals: invalid rate parameters");
    }
    // Total mass of the arrival intensity on (-inf, 0]; the normalized
    // profile is an Exp(eta) density mirrored to negative times.
    const double mass = lambda0_i * std::exp(psi_B_i) / eta_i;
    const std::uint64_t count = rng.poisson(mass);
    std::vector<double> arrivals(count);
    for (auto& tau : arrivals) tau = -rng.exponential(eta_i);
    return arrivals;
}

SamplerPlan make_sampler_plan(const ModelParams& params,
                              const std::vector<double>& eta) {
    require_valid(params);
    const std::size_t d = params.dim();
    if (eta.size() != d) {
        throw DimensionMismatchError("make_sampler_plan: tilt vector has wrong length");
    }
    SamplerPlan plan;
    plan.eta = eta;
    plan.solutions.reserve(d);
    plan.tilted.reserve(d);
    TiltCache cache(params);
    for (std::size_t i = 0; i < d; ++i) {
        if (!(eta[i] > 0.0)) {
            throw std::invalid_argument("make_sampler_plan: tilt entries must be positive");
        }
        const TiltSolution& sol = cache.at(eta[i]);
        if (!sol.feasible) {
            throw InfeasibleTiltError("tilt " + std::to_string(eta[i]) +
                                      " is infeasible for this model");
        }
        plan.solutions.push_back(sol);
        plan.tilted.push_back(tilted_cluster_params(params, plan.solutions.back()));
    }
    plan.untilted = untilted_cluster_params(params);
    return plan;
}

ResidueSample sample_N0(const ModelParams& params, const SamplerPlan& plan,
                        RandomStream& rng, std::size_t cap) {
    const std::size_t d = params.dim();
    if (plan.eta.size() != d || plan.solutions.size() != d || plan.tilted.size() != d) {
        throw DimensionMismatchError("sample_N0: plan does not match the model");
    }
    ResidueSample out;
    out.stats = AcceptanceRecord(d);
    const std::uint64_t variates_before = rng.variate_count();

    for (std::size_t i = 0; i < d; ++i) {
        const double eta_i = plan.eta[i];
        const std::vector<double> arrivals = sample_cluster_arrivals(
            params.lambda0[i], plan.solutions[i].psi_B[i], eta_i, rng);
        for (const double tau : arrivals) {
            // Full cluster, no horizon: the acceptance test below is a
            // functional of the complete tree.
            Cluster cluster = generate_cluster(plan.tilted[i], i, tau, rng,
                                               std::numeric_limits<double>::infinity(),
                                               cap);
            const double u = rng.uniform();
            out.stats.proposed[i] += 1;
            out.stats.uniforms_drawn += 1;
            out.stats.events_generated += cluster.events.size();

            const bool survives_past_zero = cluster.length > -tau;
            if (survives_past_zero &&
                u <= std::exp(-eta_i * (cluster.total_birth + tau))) {
                out.stats.accepted[i] += 1;
                out.clusters.push_back(std::move(cluster));
            }
        }
    }
    out.stats.primitive_variates = rng.variate_count() - variates_before;
    return out;
}

ResidueSample sample_N0(const ModelParams& params, const std::vector<double>& eta,
                        RandomStream& rng, std::size_t cap) {
    return sample_N0(params, make_sampler_plan(params, eta), rng, cap);
}

PathSample sample_stationary_path(const ModelParams& params, const SamplerPlan& plan,
                                  double horizon, RandomStream& rng,
                                  std::size_t cap) {
    if (!(horizon > 0.0)) {
        throw std::invalid_argument("sample_stationary_path: horizon must be positive");
    }
    ResidueSample residue = sample_N0(params, plan, rng, cap);
    PathSample path = simulate_forward(params, plan.untilted, horizon, rng, cap);
    path.residue_stats = std::move(residue.stats);

    for (const Cluster& cluster : residue.clusters) {
        for (const Event& event : cluster.events) {
            if (event.time >= 0.0 && event.time <= horizon) {
                path.times[event.direction].push_back(event.time);
            }
        }
    }
    for (auto& times : path.times) std::sort(times.begin(), times.end());
    return path;
}

PathSample sample_stationary_path(const ModelParams& params,
                                  const std::vector<double>& eta, double horizon,
                                  RandomStream& rng, std::size_t cap) {
    return sample_stationary_path(params, make_sampler_plan(params, eta), horizon,
                                  rng, cap);
}

} // namespace hawkes
