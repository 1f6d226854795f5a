#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

#include "hawkes/branching.hpp"
#include "hawkes/linalg.hpp"
#include "hawkes/model.hpp"

namespace hawkes {

// Everything the tilted sampler needs at one tilt level: the total-birth
// c.g.f. vector, the tilted offspring matrix and its mean cluster sizes.
struct TiltSolution {
    double eta = 0.0;
    std::vector<double> psi_B;           // c.g.f. of cluster total birth time
    Matrix psi_f;                        // birth c.g.f. per pair at eta
    Matrix h_tilde;                      // tilted offspring means
    std::vector<double> s_tilde_rowsums; // mean tilted cluster size per root direction
    bool feasible = false;
};

// Solves the coupled c.g.f. system by fixed-point iteration from zero,
// which lands on the minimal nonnegative root. Returns feasible=false when
// the iteration diverges (tilt at or beyond the feasibility boundary);
// throws TiltTooLargeError when theta already breaks the birth c.g.f.
TiltSolution solve_psi_B(const ModelParams& params, double theta);

// Tilted offspring law of Algorithm-2 proposals at the solution's tilt.
// Throws InfeasibleTiltError on an infeasible solution.
EffectiveClusterParams tilted_cluster_params(const ModelParams& params,
                                             const TiltSolution& sol);

// Cache of tilt solutions keyed by eta at 1e-12 granularity. The full
// coupled system depends on the scalar tilt only, so distinct directions
// requesting the same eta share one solve.
class TiltCache {
  public:
    explicit TiltCache(const ModelParams& params) : params_(&params) {}

    // Solve or reuse; the returned reference stays valid for the cache's
    // lifetime. Safe to call from multiple threads.
    const TiltSolution& at(double eta);

  private:
    const ModelParams* params_;
    std::map<std::int64_t, TiltSolution> solutions_;
    std::mutex mutex_;
};

// Expected number of random variables per sampling run at the given
// per-direction tilt vector. Throws InfeasibleTiltError if any coordinate
// is infeasible and std::invalid_argument on nonpositive entries.
double complexity_X(const ModelParams& params, const std::vector<double>& eta);
double complexity_X(const ModelParams& params, TiltCache& cache,
                    const std::vector<double>& eta);

// Lower bound (within tol) on the tilt feasibility boundary, found by
// bisecting the feasibility of solve_psi_B over (0, min beta). The system
// couples all directions through one scalar tilt, so every coordinate of
// the returned vector carries the same bound.
std::vector<double> theta0_upper(const ModelParams& params, double tol = 1e-6);

} // namespace hawkes
