#pragma once

#include <cstdint>
#include <random>

namespace hawkes {

// Deterministic random stream owned by a single replication.
//
// Streams are keyed by (master seed, stream index), so replication r draws
// the same variate sequence no matter how replications are scheduled across
// threads. The variate counter counts primitive draws (each uniform,
// exponential or Poisson call is one variate regardless of how many raw
// engine words it consumes internally).
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0);

    // U[0, 1)
    double uniform();
    // Exponential with the given rate (> 0).
    double exponential(double rate);
    // Poisson count with the given mean (>= 0). A zero mean returns 0
    // without touching the engine or the counter.
    std::uint64_t poisson(double mean);

    std::uint64_t variate_count() const noexcept { return variates_; }

  private:
    double raw_uniform();

    std::mt19937_64 engine_;
    std::uint64_t variates_ = 0;
};

} // namespace hawkes
