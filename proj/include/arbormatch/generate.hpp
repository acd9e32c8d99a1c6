#pragma once

#include <cstdint>

#include "arbormatch/stream.hpp"

namespace arbormatch {

// Union of `alpha` edge-disjoint random spanning forests on n vertices, in a
// uniformly random stream order. Candidate edges duplicated across forests
// are skipped, so the arboricity of the result is at most alpha by
// construction. Deterministic for a fixed (n, alpha, seed).
EdgeStream generate_forest_union(VertexId n, std::uint32_t alpha, std::uint64_t seed);

// Same edge multiset in a uniformly random order, deterministic per seed.
EdgeStream shuffle_stream(const EdgeStream& s, std::uint64_t seed);

}  // namespace arbormatch
