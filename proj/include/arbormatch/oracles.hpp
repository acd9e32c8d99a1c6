#pragma once

#include <cstdint>
#include <vector>

#include "arbormatch/stream.hpp"

namespace arbormatch {

// Exact reference computations over a full in-memory stream. These are the
// ground truth the one-pass estimator is checked against; clarity is traded
// for speed throughout, and none of them respects any memory bound.

// Later-arrival counts for one stream position: how many strictly later
// stream edges touch each endpoint of the edge stored there. `later_u`
// belongs to the smaller endpoint id, `later_v` to the larger.
struct TailCount {
    std::uint32_t later_u = 0;
    std::uint32_t later_v = 0;

    friend bool operator==(const TailCount& a, const TailCount& b) {
        return a.later_u == b.later_u && a.later_v == b.later_v;
    }
};

// One TailCount per stream position, in stream order.
std::vector<TailCount> tail_counts(const EdgeStream& s);

// An edge survives at threshold alpha when each endpoint sees at most alpha
// later incident edges; a tracked copy of it would never be evicted.
struct SurvivorSet {
    std::size_t count = 0;
    std::vector<Edge> edges;  // in stream order
};

SurvivorSet survivors(const EdgeStream& s, std::uint32_t alpha);

// Survivor count of the length-t prefix, 1 <= t <= |s|.
std::size_t survivor_count_prefix(const EdgeStream& s, std::uint32_t alpha, std::size_t t);

// Survivor counts for every prefix plus their maximum, the quantity the
// one-pass estimator targets. `peak_prefix` is the smallest maximizing t
// (1-based), 0 for an empty stream.
struct PrefixProfile {
    std::vector<std::size_t> per_prefix;  // index t-1 holds the length-t value
    std::size_t peak = 0;
    std::size_t peak_prefix = 0;
};

PrefixProfile survivor_profile(const EdgeStream& s, std::uint32_t alpha);

// Bookkeeping over the heavy vertices (degree >= alpha + 1). For a heavy
// vertex the retained set is its last alpha+1 stream edges; a light endpoint
// retains all of its edges. An edge is good when both endpoints retain it
// and wasted when exactly one heavy endpoint of a heavy-heavy edge does.
// Good edges are exactly the survivors.
struct DiagnosticReport {
    std::vector<VertexId> heavy;        // sorted vertex ids with degree >= alpha+1
    std::size_t good_no_heavy = 0;      // good edges with no heavy endpoint
    std::size_t good_one_heavy = 0;     // good edges with exactly one heavy endpoint
    std::size_t good_two_heavy = 0;     // good edges with two heavy endpoints
    std::size_t wasted_two_heavy = 0;   // wasted edges with two heavy endpoints
    std::size_t light_edge_count = 0;   // edges with no heavy endpoint
    std::size_t survivor_count = 0;

    // Always: survivor_count == good_no_heavy + good_one_heavy + good_two_heavy,
    //         good_no_heavy == light_edge_count,
    //         good_one_heavy + 2 * good_two_heavy + wasted_two_heavy
    //             == (alpha + 1) * heavy.size().
};

DiagnosticReport classify_edges(const EdgeStream& s, std::uint32_t alpha);

}  // namespace arbormatch
