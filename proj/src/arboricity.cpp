#include "arbormatch/arboricity.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "arbormatch/errors.hpp"

namespace arbormatch {

std::uint32_t exact_arboricity(const Graph& g, std::size_t vertex_cap) {
    if (g.edges.empty()) throw EmptyGraphError();

    // Only non-isolated vertices matter: adding an isolated vertex to a
    // subset can never raise its density.
    std::unordered_map<VertexId, unsigned> id;
    for (const Edge& e : g.edges) {
        id.emplace(e.u, id.size());
        id.emplace(e.v, id.size());
    }
    const std::size_t k = id.size();
    if (k > vertex_cap) throw InstanceTooLarge("non-isolated vertex count", k, vertex_cap);

    std::vector<std::uint32_t> adj(k, 0);
    for (const Edge& e : g.edges) {
        unsigned a = id[e.u], b = id[e.v];
        adj[a] |= std::uint32_t(1) << b;
        adj[b] |= std::uint32_t(1) << a;
    }

    std::uint32_t best = 0;
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << k); ++mask) {
        unsigned size = static_cast<unsigned>(__builtin_popcount(mask));
        if (size < 2) continue;
        unsigned twice_edges = 0;
        for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
            unsigned v = static_cast<unsigned>(__builtin_ctz(rest));
            twice_edges += static_cast<unsigned>(__builtin_popcount(adj[v] & mask));
        }
        unsigned inside = twice_edges / 2;
        std::uint32_t density = (inside + size - 2) / (size - 1);  // ceil(inside / (size-1))
        best = std::max(best, density);
    }
    return best;
}

}  // namespace arbormatch
