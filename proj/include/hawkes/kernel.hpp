#pragma once

#include <cstddef>

#include "hawkes/linalg.hpp"
#include "hawkes/rng.hpp"

namespace hawkes {

// What the branching samplers and the tilt solver need from an excitation
// family: branching weights, the birth-time c.g.f., and a sampler for the
// tilted birth density. New kernel families plug in by implementing this
// interface; nothing downstream touches the parameterization directly.
class Kernel {
  public:
    virtual ~Kernel() = default;

    virtual std::size_t dim() const noexcept = 0;

    // Expected number of direction-j children per direction-i event.
    virtual double weight(std::size_t i, std::size_t j) const = 0;

    // log E[exp(theta b)] for the (i, j) birth density.
    // Throws TiltTooLargeError when the integral diverges.
    virtual double birth_cgf(std::size_t i, std::size_t j, double theta) const = 0;

    // Supremum of tilt levels with a finite birth c.g.f. for every pair.
    virtual double tilt_bound() const noexcept = 0;

    // Draw from the eta-tilted birth density of the (i, j) pair.
    virtual double sample_birth(std::size_t i, std::size_t j, double eta,
                                RandomStream& rng) const = 0;
};

// Exciting-kernel family h_ij(t) = alpha_ij * exp(-beta_ij * t).
// Birth times are exponential with rate beta_ij, so the tilted birth density
// at level eta is again exponential with rate beta_ij - eta.
class ExponentialKernel final : public Kernel {
  public:
    ExponentialKernel() = default;
    // Throws DimensionMismatchError unless alpha and beta are square
    // matrices of the same nonzero size. Entry signs are checked by
    // validate_model, not here.
    ExponentialKernel(Matrix alpha, Matrix beta);

    std::size_t dim() const noexcept override { return alpha_.rows(); }
    double weight(std::size_t i, std::size_t j) const override {
        return alpha_(i, j) / beta_(i, j);
    }
    double birth_cgf(std::size_t i, std::size_t j, double theta) const override;
    double tilt_bound() const noexcept override { return min_beta_; }
    double sample_birth(std::size_t i, std::size_t j, double eta,
                        RandomStream& rng) const override;

    const Matrix& alpha() const noexcept { return alpha_; }
    const Matrix& beta() const noexcept { return beta_; }

  private:
    Matrix alpha_;
    Matrix beta_;
    double min_beta_ = 0.0;
};

} // namespace hawkes
