#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hawkes/kernel.hpp"
#include "hawkes/linalg.hpp"
#include "hawkes/rng.hpp"

namespace hawkes {

// Background intensities plus the excitation kernel.
struct ModelParams {
    std::vector<double> lambda0;
    ExponentialKernel kernel;

    std::size_t dim() const noexcept { return lambda0.size(); }
};

struct ValidationReport {
    bool ok = false;
    double spectral_radius = 0.0;
    bool lambda0_positive = false;
    bool kernel_nonnegative = false; // alpha >= 0 and beta > 0 everywhere
    bool stable = false;             // spectral radius of the branching matrix < 1
    // Every tilt below this keeps the birth c.g.f. finite for all pairs
    // (equals min beta for the exponential family).
    double eta_feasible_max = 0.0;
    std::vector<std::string> issues;
};

// Throws DimensionMismatchError if lambda0 and the kernel disagree on d.
void check_dimensions(const ModelParams& params);

// Checks positivity of the background rates, sign constraints on the kernel
// and the stability condition, and reports the feasible tilt range.
ValidationReport validate_model(const ModelParams& params);

// Throws unless validate_model passes: UnstableModelError for instability,
// HawkesError for sign violations.
void require_valid(const ModelParams& params);

// Branching matrix: expected direction-j offspring per direction-i event.
Matrix hbar(const ModelParams& params);

// Stationary arrival rate per direction, the solution of (I - hbar^T) x = lambda0.
// Throws UnstableModelError if the system is singular or the solution is
// not strictly positive.
std::vector<double> stationary_intensity(const ModelParams& params);

// Birth-time c.g.f. for the (i, j) pair. Throws TiltTooLargeError at or
// beyond the integrability bound.
double psi_f(const ModelParams& params, std::size_t i, std::size_t j, double theta);

// One draw from the eta-tilted birth density of the (i, j) pair.
double sample_tilted_birth(const ModelParams& params, std::size_t i, std::size_t j,
                           double eta, RandomStream& rng);

} // namespace hawkes
