#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hawkes {

// One arrival inside a cluster. Index and parent are 1-based positions in
// the cluster's event list; the immigrant is event 1 with parent 0 and zero
// birth time. Directions are 0-based throughout the library and converted
// to 1-based only in external formats.
struct Event {
    std::size_t index = 0;
    std::size_t direction = 0;
    std::size_t parent = 0;
    double time = 0.0;  // absolute arrival time
    double birth = 0.0; // gap to the parent's arrival
};

// An immigrant event plus all of its descendants.
struct Cluster {
    std::size_t immigrant_direction = 0;
    double tau = 0.0; // immigrant arrival time
    std::vector<Event> events;
    double length = 0.0;      // last arrival minus tau
    double total_birth = 0.0; // sum of all parent-to-child gaps
};

// Instrumentation for one replication (or an aggregate of replications).
// events_generated counts every event materialized across proposed clusters,
// rejected ones included; uniforms_drawn counts one acceptance uniform per
// proposed cluster; primitive_variates counts raw draws from the stream.
struct AcceptanceRecord {
    std::vector<std::uint64_t> proposed;
    std::vector<std::uint64_t> accepted;
    std::uint64_t events_generated = 0;
    std::uint64_t uniforms_drawn = 0;
    std::uint64_t primitive_variates = 0;

    explicit AcceptanceRecord(std::size_t dim = 0)
        : proposed(dim, 0), accepted(dim, 0) {}

    // The random-variable ledger the complexity formula predicts:
    // all events generated plus one uniform per proposed cluster.
    std::uint64_t rv_total() const noexcept {
        return events_generated + uniforms_drawn;
    }

    void merge(const AcceptanceRecord& other);
};

// One sample path on [0, horizon]: per-direction sorted arrival times plus
// instrumentation, split between the pre-time-0 residue part and the
// forward (transient) part.
struct PathSample {
    std::vector<std::vector<double>> times; // per direction, sorted
    AcceptanceRecord residue_stats;         // clusters rooted before time 0
    AcceptanceRecord forward_stats;         // clusters rooted in [0, horizon]
};

} // namespace hawkes
