#include "hawkes/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hawkes/errors.hpp"

namespace hawkes {

ExponentialKernel::ExponentialKernel(Matrix alpha, Matrix beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_.rows() == 0 || alpha_.rows() != alpha_.cols() ||
        beta_.rows() != alpha_.rows() || beta_.cols() != alpha_.cols()) {
        throw DimensionMismatchError(
            "ExponentialKernel: alpha and beta must be square matrices of the same size");
    }
    min_beta_ = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < beta_.rows(); ++i)
        for (std::size_t j = 0; j < beta_.cols(); ++j)
            min_beta_ = std::min(min_beta_, beta_(i, j));
}

double ExponentialKernel::birth_cgf(std::size_t i, std::size_t j, double theta) const {
    const double b = beta_(i, j);
    if (theta >= b) {
        throw TiltTooLargeError("birth c.g.f. diverges: theta " + std::to_string(theta) +
                                " >= beta " + std::to_string(b));
    }
    return std::log(b / (b - theta));
}

double ExponentialKernel::sample_birth(std::size_t i, std::size_t j, double eta,
                                       RandomStream& rng) const {
    const double b = beta_(i, j);
    if (eta >= b) {
        throw TiltTooLargeError("tilted birth density undefined: eta " +
                                std::to_string(eta) + " >= beta " + std::to_string(b));
    }
    return rng.exponential(b - eta);
}

void check_dimensions(const ModelParams& params) {
    if (params.lambda0.empty()) {
        throw DimensionMismatchError("model has no directions");
    }
    if (params.kernel.dim() != params.lambda0.size()) {
        throw DimensionMismatchError("lambda0 has " + std::to_string(params.lambda0.size()) +
                                     " entries but the kernel is " +
                                     std::to_string(params.kernel.dim()) + "-dimensional");
    }
}

ValidationReport validate_model(const ModelParams& params) {
    check_dimensions(params);
    const std::size_t d = params.dim();
    ValidationReport report;

    report.lambda0_positive = true;
    for (double v : params.lambda0) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            report.lambda0_positive = false;
            report.issues.push_back("background intensities must be positive and finite");
            break;
        }
    }

    report.kernel_nonnegative = true;
    const Matrix& alpha = params.kernel.alpha();
    const Matrix& beta = params.kernel.beta();
    for (std::size_t i = 0; i < d && report.kernel_nonnegative; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            if (!(beta(i, j) > 0.0) || !std::isfinite(beta(i, j)) ||
                alpha(i, j) < 0.0 || !std::isfinite(alpha(i, j))) {
                report.kernel_nonnegative = false;
                report.issues.push_back("kernel needs alpha >= 0 and beta > 0 everywhere");
                break;
            }
        }
    }

    if (report.kernel_nonnegative) {
        report.spectral_radius = spectral_radius(hbar(params));
        report.stable = report.spectral_radius < 1.0;
        if (!report.stable) {
            report.issues.push_back("branching matrix spectral radius " +
                                    std::to_string(report.spectral_radius) +
                                    " >= 1: stationary process does not exist");
        }
        // For exponential decay every tilt below the smallest rate keeps
        // the birth c.g.f. finite, so the light-tail requirement holds on
        // the whole interval [0, min beta).
        report.eta_feasible_max = params.kernel.tilt_bound();
    }

    report.ok = report.lambda0_positive && report.kernel_nonnegative && report.stable;
    return report;
}

void require_valid(const ModelParams& params) {
    const ValidationReport report = validate_model(params);
    if (report.ok) return;
    if (report.lambda0_positive && report.kernel_nonnegative && !report.stable) {
        throw UnstableModelError(report.issues.front());
    }
    throw HawkesError("invalid model: " + report.issues.front());
}

Matrix hbar(const ModelParams& params) {
    check_dimensions(params);
    const std::size_t d = params.dim();
    Matrix h(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) h(i, j) = params.kernel.weight(i, j);
    return h;
}

std::vector<double> stationary_intensity(const ModelParams& params) {
    const Matrix h = hbar(params);
    const std::size_t d = params.dim();
    Matrix system = Matrix::identity(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) system(i, j) -= h(j, i);

    std::vector<double> x;
    try {
        x = solve_linear(std::move(system), params.lambda0);
    } catch (const HawkesError&) {
        throw UnstableModelError("stationary intensity undefined: I - hbar^T is singular");
    }
    for (double v : x) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw UnstableModelError(
                "stationary intensity undefined: solution not strictly positive");
        }
    }
    return x;
}

double psi_f(const ModelParams& params, std::size_t i, std::size_t j, double theta) {
    check_dimensions(params);
    return params.kernel.birth_cgf(i, j, theta);
}

double sample_tilted_birth(const ModelParams& params, std::size_t i, std::size_t j,
                           double eta, RandomStream& rng) {
    check_dimensions(params);
    return params.kernel.sample_birth(i, j, eta, rng);
}

} // namespace hawkes
