#include "hawkes/stats.hpp"

#include <cmath>

#include "hawkes/errors.hpp"

namespace hawkes {

MeanCI ci95(std::span<const double> samples) {
    const std::size_t n = samples.size();
    if (n == 0) {
        throw EmptyInputError("ci95: empty sample");
    }
    double mean = 0.0;
    for (const double x : samples) mean += x;
    mean /= static_cast<double>(n);

    if (n == 1) {
        return MeanCI{mean, 0.0, true};
    }
    double ss = 0.0;
    for (const double x : samples) {
        const double delta = x - mean;
        ss += delta * delta;
    }
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));
    return MeanCI{mean, 1.96 * sd / std::sqrt(static_cast<double>(n)), false};
}

} // namespace hawkes
