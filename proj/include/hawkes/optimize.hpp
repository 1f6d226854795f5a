#pragma once

#include <string>
#include <vector>

#include "hawkes/model.hpp"

namespace hawkes {

struct OptimizeResult {
    std::vector<double> eta_star;
    double X_at_eta_star = 0.0;
    std::vector<double> theta0;
    // "interior", "lower" or "upper": whether a coordinate landed against
    // an end of its search interval.
    std::vector<std::string> boundary;
};

// Minimizes the expected cost over the feasible box. The cost separates
// into one convex summand per coordinate, so this runs d independent
// golden-section searches on (eps, theta0_i - eps), each to bracket width
// tol. Throws UnstableModelError for unstable models.
OptimizeResult optimize_eta(const ModelParams& params, double tol);

} // namespace hawkes
