#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "arbormatch/edge.hpp"

namespace arbormatch {

class EdgeStream;

// Order-free view of a validated stream: a simple undirected graph.
struct Graph {
    VertexId n = 0;
    std::vector<Edge> edges;

    static Graph from_stream(const EdgeStream& s);
};

// Finite ordered sequence of distinct edges over vertices 0..n-1. The order
// is semantically load-bearing; instances are immutable once built.
class EdgeStream {
public:
    // Checks every item against the simple-graph contract and reports the
    // first offending position. Preserves input order.
    static EdgeStream validate(const std::vector<std::pair<VertexId, VertexId>>& raw, VertexId n);

    // Assembles a stream from edges already known to satisfy the contract
    // (generators, shuffles of validated streams).
    static EdgeStream from_validated(std::vector<Edge> edges, VertexId n);

    VertexId vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }

    Graph to_graph() const { return Graph{n_, edges_}; }

    friend bool operator==(const EdgeStream& a, const EdgeStream& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    EdgeStream(std::vector<Edge> edges, VertexId n) : edges_(std::move(edges)), n_(n) {}

    std::vector<Edge> edges_;
    VertexId n_;
};

inline Graph Graph::from_stream(const EdgeStream& s) { return s.to_graph(); }

}  // namespace arbormatch
