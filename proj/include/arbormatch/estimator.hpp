#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "arbormatch/edge.hpp"
#include "arbormatch/rng.hpp"
#include "arbormatch/stream.hpp"

namespace arbormatch {

// Tracked-set capacity used when EstimatorConfig.capacity is 0:
// ceil(30 * epsilon^-2 * log2(n)).
std::size_t default_capacity(double epsilon, std::uint64_t n);

struct EstimatorConfig {
    std::uint32_t alpha = 0;
    double epsilon = 0.2;      // must lie in (0, 1)
    VertexId n = 2;            // declared vertex count, known before the stream
    std::size_t capacity = 0;  // 0 selects default_capacity(epsilon, n)
    std::uint64_t seed = 0;
    // Rejecting repeated edges needs memory linear in the stream, so the
    // sampler leaves it to the validation layer unless asked.
    bool detect_duplicates = false;
};

// A sampled edge plus eviction counters: how many stream edges incident to
// each endpoint have arrived since this edge was sampled. Both stay at most
// alpha; an edge whose counter passes alpha is evicted in the same step.
struct TrackedEdge {
    Edge edge;
    std::uint32_t later_u = 0;  // counter for edge.u
    std::uint32_t later_v = 0;  // counter for edge.v
};

// One-pass sampler for the peak survivor count of an edge stream. Stores at
// most `capacity` edges; each incoming edge is sampled with probability
// 2^-level, tracked edges losing survivor status are evicted, and whenever
// the tracked set overflows the level rises and each edge keeps its place
// with probability 1/2 per round. The estimate is the running maximum of
// |tracked| * 2^level, held in exact integer arithmetic.
//
// Single-owner: mutate from one thread at a time. Independent instances are
// safe to run in parallel.
class SurvivorSampler {
public:
    explicit SurvivorSampler(const EstimatorConfig& config);  // throws InvalidConfig

    void process(const Edge& e);

    // The peak scaled count seen so far; the estimate once the stream ends.
    std::uint64_t estimate() const;

    const std::vector<TrackedEdge>& tracked() const { return tracked_; }
    std::uint32_t level() const { return level_; }
    std::size_t capacity() const { return capacity_; }
    std::uint64_t edges_seen() const { return edges_seen_; }
    // Largest tracked-set size observed after any fully processed edge.
    std::size_t peak_tracked() const { return peak_tracked_; }
    const EstimatorConfig& config() const { return config_; }

private:
    bool sample_coin();  // heads with probability 2^-level, one draw per edge

    EstimatorConfig config_;
    std::size_t capacity_;
    std::vector<TrackedEdge> tracked_;
    std::uint32_t level_ = 0;
    std::uint64_t peak_count_ = 0;   // running max as count * 2^peak_level
    std::uint32_t peak_level_ = 0;
    std::uint64_t edges_seen_ = 0;
    std::size_t peak_tracked_ = 0;
    Rng rng_;
    std::unordered_set<std::uint64_t> seen_;  // populated only when detecting duplicates
};

// Feed a whole validated stream through a fresh sampler. The stream's vertex
// count must not exceed the configured n.
std::uint64_t run_estimator(const EdgeStream& s, const EstimatorConfig& config);

// Matching-size bracket derived from the peak-survivor estimate. For a graph
// of arboricity at most alpha the peak survivor count lies between match(G)
// and (alpha+2) * match(G), so whenever the estimate lands within
// (1 +- epsilon) of the true peak, [lower, upper] contains match(G).
struct MatchingEstimate {
    std::uint64_t estimate = 0;
    double lower = 0.0;  // estimate / ((1+epsilon) * (alpha+2))
    double upper = 0.0;  // estimate / (1-epsilon)
};

MatchingEstimate estimate_matching(const EdgeStream& s, const EstimatorConfig& config);

}  // namespace arbormatch
