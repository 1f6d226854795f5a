#include "hawkes/tilt.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hawkes/errors.hpp"

namespace hawkes {

namespace {

constexpr double kFixedPointTol = 1e-13;
constexpr double kDivergenceGuard = 1e3;
constexpr std::size_t kMaxFixedPointIter = 100000;

} // namespace

TiltSolution solve_psi_B(const ModelParams& params, double theta) {
    check_dimensions(params);
    if (theta < 0.0 || !std::isfinite(theta)) {
        throw std::invalid_argument("solve_psi_B: theta must be finite and nonnegative");
    }
    if (theta >= params.kernel.tilt_bound()) {
        throw TiltTooLargeError("tilt " + std::to_string(theta) +
                                " at or beyond the birth c.g.f. bound " +
                                std::to_string(params.kernel.tilt_bound()));
    }

    const std::size_t d = params.dim();
    TiltSolution sol;
    sol.eta = theta;
    sol.psi_f = Matrix(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            sol.psi_f(i, j) = params.kernel.birth_cgf(i, j, theta);

    const Matrix h = hbar(params);

    // Iterating the system from zero walks up to the minimal nonnegative
    // root, which is the true c.g.f.; divergence past the guard means the
    // tilt sits at or beyond the feasibility boundary.
    std::vector<double> x(d, 0.0), next(d, 0.0);
    bool converged = false;
    for (std::size_t it = 0; it < kMaxFixedPointIter; ++it) {
        double diff = 0.0;
        bool diverged = false;
        for (std::size_t i = 0; i < d; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < d; ++j) {
                s += h(i, j) * (std::exp(sol.psi_f(i, j) + x[j]) - 1.0);
            }
            if (!(s <= kDivergenceGuard)) {
                diverged = true;
                break;
            }
            diff = std::max(diff, std::abs(s - x[i]));
            next[i] = s;
        }
        if (diverged) return sol; // feasible stays false
        x = next;
        if (diff < kFixedPointTol) {
            converged = true;
            break;
        }
    }
    if (!converged) return sol;

    sol.psi_B = x;
    sol.h_tilde = Matrix(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            sol.h_tilde(i, j) = h(i, j) * std::exp(sol.psi_f(i, j) + x[j]);

    if (spectral_radius(sol.h_tilde) >= 1.0) {
        return sol; // boundary case: tilted offspring law not subcritical
    }
    Matrix system = Matrix::identity(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) system(i, j) -= sol.h_tilde(i, j);
    try {
        sol.s_tilde_rowsums = solve_linear(std::move(system), std::vector<double>(d, 1.0));
    } catch (const HawkesError&) {
        return sol;
    }
    sol.feasible = true;
    return sol;
}

EffectiveClusterParams tilted_cluster_params(const ModelParams& params,
                                             const TiltSolution& sol) {
    check_dimensions(params);
    if (!sol.feasible) {
        throw InfeasibleTiltError("no finite c.g.f. solution at tilt " +
                                  std::to_string(sol.eta));
    }
    EffectiveClusterParams eff;
    eff.offspring_means = sol.h_tilde;
    eff.kernel = &params.kernel;
    eff.eta = sol.eta;
    eff.spectral_radius = spectral_radius(sol.h_tilde);
    return eff;
}

const TiltSolution& TiltCache::at(double eta) {
    const auto key = static_cast<std::int64_t>(std::llround(eta * 1e12));
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = solutions_.find(key);
    if (it == solutions_.end()) {
        it = solutions_.emplace(key, solve_psi_B(*params_, eta)).first;
    }
    return it->second;
}

double complexity_X(const ModelParams& params, TiltCache& cache,
                    const std::vector<double>& eta) {
    check_dimensions(params);
    const std::size_t d = params.dim();
    if (eta.size() != d) {
        throw DimensionMismatchError("complexity_X: tilt vector has wrong length");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        if (!(eta[i] > 0.0)) {
            throw std::invalid_argument("complexity_X: tilt entries must be positive");
        }
        const TiltSolution& sol = cache.at(eta[i]);
        if (!sol.feasible) {
            throw InfeasibleTiltError("complexity undefined: tilt " +
                                      std::to_string(eta[i]) + " is infeasible");
        }
        total += params.lambda0[i] * std::exp(sol.psi_B[i]) / eta[i] *
                 (1.0 + sol.s_tilde_rowsums[i]);
    }
    return total;
}

double complexity_X(const ModelParams& params, const std::vector<double>& eta) {
    TiltCache cache(params);
    return complexity_X(params, cache, eta);
}

std::vector<double> theta0_upper(const ModelParams& params, double tol) {
    require_valid(params);
    if (!(tol > 0.0)) {
        throw std::invalid_argument("theta0_upper: tolerance must be positive");
    }
    double lo = 0.0;
    double hi = params.kernel.tilt_bound();
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (solve_psi_B(params, mid).feasible) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return std::vector<double>(params.dim(), lo);
}

} // namespace hawkes
