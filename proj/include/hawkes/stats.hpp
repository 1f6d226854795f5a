#pragma once

#include <span>

namespace hawkes {

// Normal-approximation 95% interval. A single observation yields a zero
// half-width flagged as degenerate rather than NaN.
struct MeanCI {
    double mean = 0.0;
    double halfwidth = 0.0;
    bool degenerate = false;
};

// Throws EmptyInputError on an empty sample.
MeanCI ci95(std::span<const double> samples);

} // namespace hawkes
