#include "hawkes/optimize.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hawkes/errors.hpp"
#include "hawkes/tilt.hpp"

namespace hawkes {

namespace {

constexpr double kEdgeMargin = 1e-6;

// One coordinate's contribution to the expected cost, +inf when the tilt
// solve does not converge (keeps the search inside the feasible region).
double coordinate_cost(const ModelParams& params, TiltCache& cache,
                       std::size_t i, double t) {
    const TiltSolution& sol = cache.at(t);
    if (!sol.feasible) return std::numeric_limits<double>::infinity();
    return params.lambda0[i] * std::exp(sol.psi_B[i]) / t *
           (1.0 + sol.s_tilde_rowsums[i]);
}

} // namespace

OptimizeResult optimize_eta(const ModelParams& params, double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("optimize_eta: tolerance must be positive");
    }
    require_valid(params);

    const std::size_t d = params.dim();
    OptimizeResult result;
    result.theta0 = theta0_upper(params);
    result.eta_star.resize(d);
    result.boundary.resize(d);

    TiltCache cache(params);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;

    for (std::size_t i = 0; i < d; ++i) {
        double a = kEdgeMargin;
        double b = result.theta0[i] - kEdgeMargin;
        if (!(b > a)) {
            throw InfeasibleTiltError("optimize_eta: no interior feasible tilt");
        }
        // Golden-section search; the cost is convex per coordinate, so the
        // bracket always contains the minimizer.
        double c = b - inv_phi * (b - a);
        double e = a + inv_phi * (b - a);
        double fc = coordinate_cost(params, cache, i, c);
        double fe = coordinate_cost(params, cache, i, e);
        while (b - a > tol) {
            if (fc < fe) {
                b = e;
                e = c;
                fe = fc;
                c = b - inv_phi * (b - a);
                fc = coordinate_cost(params, cache, i, c);
            } else {
                a = c;
                c = e;
                fc = fe;
                e = a + inv_phi * (b - a);
                fe = coordinate_cost(params, cache, i, e);
            }
        }
        const double eta_i = 0.5 * (a + b);
        result.eta_star[i] = eta_i;
        if (eta_i < kEdgeMargin + 10.0 * tol) {
            result.boundary[i] = "lower";
        } else if (eta_i > result.theta0[i] - kEdgeMargin - 10.0 * tol) {
            result.boundary[i] = "upper";
        } else {
            result.boundary[i] = "interior";
        }
    }
    result.X_at_eta_star = complexity_X(params, cache, result.eta_star);
    return result;
}

} // namespace hawkes
