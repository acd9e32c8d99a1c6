#include "arbormatch/matching.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "arbormatch/errors.hpp"

namespace arbormatch {
namespace {

// Search state over non-isolated vertices compacted to 0..k-1, k <= 64.
struct MatchingSearch {
    std::vector<std::vector<int>> adj;
    std::size_t best = 0;

    // Branch on the lowest free vertex that still has a free neighbor:
    // either it stays unmatched for good or it pairs with one of them.
    // Enumerates every matching once, pruned by the pairing upper bound.
    void explore(int from, std::uint64_t used, std::size_t count) {
        int k = static_cast<int>(adj.size());
        int v = from;
        while (v < k) {
            if (!(used >> v & 1)) {
                bool has_free_neighbor = false;
                for (int w : adj[v])
                    if (!(used >> w & 1)) {
                        has_free_neighbor = true;
                        break;
                    }
                if (has_free_neighbor) break;
            }
            ++v;
        }
        if (v == k) {
            best = std::max(best, count);
            return;
        }
        // Free vertices at or above v; every further matching edge uses two.
        std::uint64_t undecided = ~used & ~((std::uint64_t(1) << v) - 1);
        if (k < 64) undecided &= (std::uint64_t(1) << k) - 1;
        std::size_t free_left = static_cast<std::size_t>(__builtin_popcountll(undecided));
        if (count + free_left / 2 <= best) return;

        for (int w : adj[v]) {
            if (used >> w & 1) continue;
            explore(v + 1, used | (std::uint64_t(1) << v) | (std::uint64_t(1) << w), count + 1);
        }
        explore(v + 1, used | (std::uint64_t(1) << v), count);
    }
};

}  // namespace

std::size_t maximum_matching_size(const Graph& g, std::size_t edge_cap) {
    if (g.edges.size() > edge_cap)
        throw InstanceTooLarge("edge count", g.edges.size(), edge_cap);
    if (g.edges.empty()) return 0;

    // Compact the touched vertices; isolated ones cannot join a matching.
    std::unordered_map<VertexId, int> id;
    id.reserve(g.edges.size() * 2);
    auto compact = [&](VertexId w) {
        auto [it, inserted] = id.emplace(w, static_cast<int>(id.size()));
        (void)inserted;
        return it->second;
    };

    MatchingSearch search;
    search.adj.reserve(g.edges.size() * 2);
    for (const Edge& e : g.edges) {
        int a = compact(e.u);
        int b = compact(e.v);
        if (static_cast<std::size_t>(std::max(a, b)) >= search.adj.size())
            search.adj.resize(std::max(a, b) + 1);
        search.adj[a].push_back(b);
        search.adj[b].push_back(a);
    }
    if (search.adj.size() > 64)
        throw InstanceTooLarge("non-isolated vertex count", search.adj.size(), 64);

    // Greedy matching seeds the bound so pruning bites early.
    std::uint64_t greedy_used = 0;
    std::size_t greedy = 0;
    for (const Edge& e : g.edges) {
        int a = id[e.u], b = id[e.v];
        if ((greedy_used >> a & 1) || (greedy_used >> b & 1)) continue;
        greedy_used |= (std::uint64_t(1) << a) | (std::uint64_t(1) << b);
        ++greedy;
    }
    search.best = greedy;

    search.explore(0, 0, 0);
    return search.best;
}

}  // namespace arbormatch
