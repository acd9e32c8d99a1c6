#include "arbormatch/estimator.hpp"

#include <cmath>
#include <limits>

#include "arbormatch/errors.hpp"

namespace arbormatch {
namespace {

std::uint64_t scaled_count(std::uint64_t count, std::uint32_t level) {
    if (count == 0) return 0;
    if (level >= 64 || count > (std::numeric_limits<std::uint64_t>::max() >> level))
        throw std::overflow_error("scaled tracked count exceeds 64 bits");
    return count << level;
}

}  // namespace

std::size_t default_capacity(double epsilon, std::uint64_t n) {
    return static_cast<std::size_t>(
        std::ceil(30.0 / (epsilon * epsilon) * std::log2(static_cast<double>(n))));
}

SurvivorSampler::SurvivorSampler(const EstimatorConfig& config)
    : config_(config), rng_(config.seed) {
    if (!(config.epsilon > 0.0) || !(config.epsilon < 1.0))
        throw InvalidConfig("epsilon", "must lie in (0, 1)");
    if (config.n < 2) throw InvalidConfig("n", "declared vertex count must be at least 2");
    capacity_ = config.capacity != 0 ? config.capacity
                                     : default_capacity(config.epsilon, config.n);
    if (capacity_ < 1) throw InvalidConfig("capacity", "must be at least 1");
}

bool SurvivorSampler::sample_coin() {
    // One draw per incoming edge; the low `level` bits must all be zero.
    const std::uint64_t draw = rng_();
    if (level_ == 0) return true;
    const std::uint64_t mask =
        level_ >= 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << level_) - 1);
    return (draw & mask) == 0;
}

void SurvivorSampler::process(const Edge& e) {
    if (config_.detect_duplicates && !seen_.insert(e.key()).second)
        throw StreamValidationError(StreamValidationError::Kind::DuplicateEdge,
                                    static_cast<std::size_t>(edges_seen_));

    // (a) sample the incoming edge with probability 2^-level
    const bool take = sample_coin();
    const std::size_t existing = tracked_.size();
    if (take) tracked_.push_back(TrackedEdge{e, 0, 0});

    // (b) bump the counter of every previously tracked edge sharing an
    // endpoint, evicting it once a counter passes alpha. The edge just
    // added is exempt: its counters cover strictly later arrivals only.
    std::size_t keep = 0;
    for (std::size_t i = 0; i < existing; ++i) {
        TrackedEdge t = tracked_[i];
        bool evict = false;
        if (t.edge.u == e.u || t.edge.u == e.v) evict |= ++t.later_u > config_.alpha;
        if (t.edge.v == e.u || t.edge.v == e.v) evict |= ++t.later_v > config_.alpha;
        if (!evict) tracked_[keep++] = t;
    }
    if (take) tracked_[keep++] = tracked_[existing];
    tracked_.erase(tracked_.begin() + keep, tracked_.end());

    // (c) repeated halving until the tracked set fits; one fresh coin per
    // tracked edge per round
    while (tracked_.size() > capacity_) {
        ++level_;
        std::size_t survivors = 0;
        for (std::size_t i = 0; i < tracked_.size(); ++i)
            if (rng_() & 1) tracked_[survivors++] = tracked_[i];
        tracked_.erase(tracked_.begin() + survivors, tracked_.end());
    }

    // (d) fold the current scaled count into the running maximum
    const std::uint64_t current = scaled_count(tracked_.size(), level_);
    if (current > estimate()) {
        peak_count_ = tracked_.size();
        peak_level_ = level_;
    }

    ++edges_seen_;
    if (tracked_.size() > peak_tracked_) peak_tracked_ = tracked_.size();
}

std::uint64_t SurvivorSampler::estimate() const { return scaled_count(peak_count_, peak_level_); }

std::uint64_t run_estimator(const EdgeStream& s, const EstimatorConfig& config) {
    if (s.vertex_count() > config.n)
        throw InvalidConfig("n", "stream vertex count exceeds the declared n");
    SurvivorSampler sampler(config);
    for (const Edge& e : s.edges()) sampler.process(e);
    return sampler.estimate();
}

MatchingEstimate estimate_matching(const EdgeStream& s, const EstimatorConfig& config) {
    MatchingEstimate result;
    result.estimate = run_estimator(s, config);
    const double value = static_cast<double>(result.estimate);
    result.lower = value / ((1.0 + config.epsilon) * (config.alpha + 2.0));
    result.upper = value / (1.0 - config.epsilon);
    return result;
}

}  // namespace arbormatch
