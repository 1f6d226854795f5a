#include "hawkes/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace hawkes {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream) {
    // Scramble (seed, stream) through splitmix64 so that nearby keys yield
    // unrelated engine states, then seed the full state via seed_seq.
    std::uint64_t state = seed ^ (stream * 0x9e3779b97f4a7c15ULL + 0x7f4a7c15ULL);
    const std::uint64_t w0 = splitmix64(state);
    const std::uint64_t w1 = splitmix64(state);
    const std::uint64_t w2 = splitmix64(state);
    const std::uint64_t w3 = splitmix64(state);
    std::seed_seq seq{
        static_cast<std::uint32_t>(w0), static_cast<std::uint32_t>(w0 >> 32),
        static_cast<std::uint32_t>(w1), static_cast<std::uint32_t>(w1 >> 32),
        static_cast<std::uint32_t>(w2), static_cast<std::uint32_t>(w2 >> 32),
        static_cast<std::uint32_t>(w3), static_cast<std::uint32_t>(w3 >> 32)};
    engine_.seed(seq);
}

double RandomStream::raw_uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform() {
    ++variates_;
    return raw_uniform();
}

double RandomStream::exponential(double rate) {
    if (!(rate > 0.0)) {
        throw std::invalid_argument("exponential: rate must be positive");
    }
    ++variates_;
    // (0, 1] so the log is finite.
    const double u = static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    return -std::log(u) / rate;
}

std::uint64_t RandomStream::poisson(double mean) {
    if (!(mean >= 0.0)) {
        throw std::invalid_argument("poisson: mean must be nonnegative");
    }
    if (mean == 0.0) return 0;
    ++variates_;

    if (mean < 10.0) {
        // Knuth's product-of-uniforms method.
        const double limit = std::exp(-mean);
        std::uint64_t k = 0;
        double p = 1.0;
        do {
            ++k;
            p *= raw_uniform();
        } while (p > limit);
        return k - 1;
    }

    // Hormann's PTRS transformed rejection, exact for mean >= 10.
    const double b = 0.931 + 2.53 * std::sqrt(mean);
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);
    const double log_mean = std::log(mean);
    while (true) {
        const double u = raw_uniform() - 0.5;
        const double v = raw_uniform();
        const double us = 0.5 - std::abs(u);
        const double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
        if (us >= 0.07 && v <= v_r) {
            return static_cast<std::uint64_t>(k);
        }
        if (k < 0.0 || (us < 0.013 && v > us)) {
            continue;
        }
        if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
            k * log_mean - mean - std::lgamma(k + 1.0)) {
            return static_cast<std::uint64_t>(k);
        }
    }
}

} // namespace hawkes
