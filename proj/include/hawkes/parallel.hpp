#pragma once

#include <cstdint>
#include <functional>

namespace hawkes {

// Worker count to use: explicit request > HAWKES_THREADS env > hardware.
int resolve_threads(int requested);

// Calls fn(rep) for every rep in [0, reps) across the given number of
// workers. fn must be safe to run concurrently for distinct indices; the
// first exception thrown is rethrown after all workers stop.
void parallel_for_reps(std::uint64_t reps, int threads,
                       const std::function<void(std::uint64_t)>& fn);

} // namespace hawkes
