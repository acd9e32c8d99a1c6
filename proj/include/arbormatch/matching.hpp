#pragma once

#include <cstddef>

#include "arbormatch/stream.hpp"

namespace arbormatch {

inline constexpr std::size_t kDefaultMatchingEdgeCap = 24;

// Exact maximum-matching size by exhaustive search over matchings with
// branch-and-bound pruning. Correct on general (non-bipartite) graphs;
// intended for desk-scale instances. Throws InstanceTooLarge when the graph
// has more than `edge_cap` edges.
std::size_t maximum_matching_size(const Graph& g, std::size_t edge_cap = kDefaultMatchingEdgeCap);

}  // namespace arbormatch
