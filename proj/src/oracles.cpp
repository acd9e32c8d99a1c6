#include "arbormatch/oracles.hpp"

#include <algorithm>

#include "arbormatch/errors.hpp"

namespace arbormatch {
namespace {

// Tail counts restricted to the first t stream items, written into `out`
// (resized to t). Scans the prefix backwards with running per-vertex counts.
void tail_counts_prefix(const EdgeStream& s, std::size_t t, std::vector<TailCount>& out,
                        std::vector<std::uint32_t>& scratch) {
    const auto& edges = s.edges();
    out.resize(t);
    scratch.assign(s.vertex_count(), 0);
    for (std::size_t j = t; j-- > 0;) {
        const Edge& e = edges[j];
        out[j] = TailCount{scratch[e.u], scratch[e.v]};
        ++scratch[e.u];
        ++scratch[e.v];
    }
}

std::size_t count_survivors(const std::vector<TailCount>& tails, std::uint32_t alpha) {
    std::size_t count = 0;
    for (const TailCount& tc : tails)
        if (tc.later_u <= alpha && tc.later_v <= alpha) ++count;
    return count;
}

}  // namespace

std::vector<TailCount> tail_counts(const EdgeStream& s) {
    std::vector<TailCount> out;
    std::vector<std::uint32_t> scratch;
    tail_counts_prefix(s, s.size(), out, scratch);
    return out;
}

SurvivorSet survivors(const EdgeStream& s, std::uint32_t alpha) {
    const std::vector<TailCount> tails = tail_counts(s);
    SurvivorSet result;
    for (std::size_t j = 0; j < tails.size(); ++j) {
        if (tails[j].later_u <= alpha && tails[j].later_v <= alpha)
            result.edges.push_back(s.edges()[j]);
    }
    result.count = result.edges.size();
    return result;
}

std::size_t survivor_count_prefix(const EdgeStream& s, std::uint32_t alpha, std::size_t t) {
    if (t < 1 || t > s.size()) throw PrefixOutOfRange(t, s.size());
    std::vector<TailCount> tails;
    std::vector<std::uint32_t> scratch;
    tail_counts_prefix(s, t, tails, scratch);
    return count_survivors(tails, alpha);
}

PrefixProfile survivor_profile(const EdgeStream& s, std::uint32_t alpha) {
    PrefixProfile profile;
    profile.per_prefix.reserve(s.size());
    std::vector<TailCount> tails;
    std::vector<std::uint32_t> scratch;
    // Recomputed from scratch per prefix; quadratic and obviously right.
    for (std::size_t t = 1; t <= s.size(); ++t) {
        tail_counts_prefix(s, t, tails, scratch);
        std::size_t count = count_survivors(tails, alpha);
        profile.per_prefix.push_back(count);
        if (count > profile.peak) {
            profile.peak = count;
            profile.peak_prefix = t;
        }
    }
    return profile;
}

DiagnosticReport classify_edges(const EdgeStream& s, std::uint32_t alpha) {
    const std::vector<TailCount> tails = tail_counts(s);
    std::vector<std::uint32_t> degree(s.vertex_count(), 0);
    for (const Edge& e : s.edges()) {
        ++degree[e.u];
        ++degree[e.v];
    }

    DiagnosticReport report;
    for (VertexId v = 0; v < s.vertex_count(); ++v)
        if (degree[v] >= alpha + 1) report.heavy.push_back(v);

    auto is_heavy = [&](VertexId v) { return degree[v] >= alpha + 1; };

    for (std::size_t j = 0; j < s.size(); ++j) {
        const Edge& e = s.edges()[j];
        const bool heavy_u = is_heavy(e.u);
        const bool heavy_v = is_heavy(e.v);
        // A heavy vertex retains exactly its last alpha+1 edges, i.e. those
        // with at most alpha later incident edges; a light vertex retains
        // everything (its tail count is below alpha automatically).
        const bool retained_u = tails[j].later_u <= alpha;
        const bool retained_v = tails[j].later_v <= alpha;

        if (!heavy_u && !heavy_v) ++report.light_edge_count;

        if (retained_u && retained_v) {
            ++report.survivor_count;
            if (heavy_u && heavy_v)
                ++report.good_two_heavy;
            else if (heavy_u || heavy_v)
                ++report.good_one_heavy;
            else
                ++report.good_no_heavy;
        } else if (heavy_u && heavy_v && (retained_u != retained_v)) {
            ++report.wasted_two_heavy;
        }
    }
    return report;
}

}  // namespace arbormatch
