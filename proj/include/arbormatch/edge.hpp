#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>

namespace arbormatch {

using VertexId = std::uint32_t;

// Undirected edge between two distinct vertices. Endpoints are stored
// normalized (u < v) so equality and hashing ignore the input order.
struct Edge {
    VertexId u;
    VertexId v;

    Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw std::invalid_argument("edge endpoints must differ");
    }

    bool touches(VertexId w) const { return u == w || v == w; }

    // Endpoint other than w; w must be an endpoint.
    VertexId opposite(VertexId w) const { return w == u ? v : u; }

    std::uint64_t key() const { return (std::uint64_t(u) << 32) | v; }

    friend bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
    friend bool operator!=(const Edge& a, const Edge& b) { return !(a == b); }
    friend bool operator<(const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
};

struct EdgeHash {
    std::size_t operator()(const Edge& e) const { return std::hash<std::uint64_t>{}(e.key()); }
};

}  // namespace arbormatch
