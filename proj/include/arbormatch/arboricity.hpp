#pragma once

#include <cstddef>

#include "arbormatch/stream.hpp"

namespace arbormatch {

inline constexpr std::size_t kDefaultArboricityVertexCap = 15;

// Exact arboricity via the Nash-Williams density formula: the maximum over
// vertex subsets S with |S| >= 2 of ceil(|E(G[S])| / (|S| - 1)). Enumerates
// subsets of the non-isolated vertices; throws InstanceTooLarge when there
// are more than `vertex_cap` of them, EmptyGraphError when there are no
// edges at all.
std::uint32_t exact_arboricity(const Graph& g,
                               std::size_t vertex_cap = kDefaultArboricityVertexCap);

}  // namespace arbormatch
