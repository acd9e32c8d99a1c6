#include "arbormatch/generate.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "arbormatch/rng.hpp"

namespace arbormatch {

EdgeStream generate_forest_union(VertexId n, std::uint32_t alpha, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("generator needs n >= 2");
    if (alpha < 1) throw std::invalid_argument("generator needs alpha >= 1");

    Rng rng(seed);
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> used;
    std::vector<VertexId> order(n);

    for (std::uint32_t forest = 0; forest < alpha; ++forest) {
        // Random attachment tree over a shuffled vertex order; each vertex
        // links to a uniformly random predecessor. Per-forest edges form a
        // subset of a spanning tree, so each layer is a forest.
        std::iota(order.begin(), order.end(), VertexId{0});
        shuffle_in_place(order, rng);
        for (VertexId i = 1; i < n; ++i) {
            VertexId parent = order[uniform_below(rng, i)];
            Edge e(parent, order[i]);
            if (used.insert(e.key()).second) edges.push_back(e);
        }
    }

    shuffle_in_place(edges, rng);
    return EdgeStream::from_validated(std::move(edges), n);
}

EdgeStream shuffle_stream(const EdgeStream& s, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Edge> edges = s.edges();
    shuffle_in_place(edges, rng);
    return EdgeStream::from_validated(std::move(edges), s.vertex_count());
}

}  // namespace arbormatch
