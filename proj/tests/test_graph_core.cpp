#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <vector>

#include "arbormatch/arboricity.hpp"
#include "arbormatch/edge_list_io.hpp"
#include "arbormatch/errors.hpp"
#include "arbormatch/generate.hpp"
#include "arbormatch/matching.hpp"
#include "arbormatch/rng.hpp"
#include "arbormatch/stream.hpp"

using namespace arbormatch;

namespace {

using RawEdges = std::vector<std::pair<VertexId, VertexId>>;

EdgeStream make_stream(const RawEdges& raw, VertexId n) { return EdgeStream::validate(raw, n); }

// Independent matching reference: subset DP over vertex bitmasks, usable up
// to ~16 non-isolated vertices. Deliberately a different algorithm from the
// library's branch-and-bound.
std::size_t matching_by_subset_dp(const Graph& g) {
    std::vector<VertexId> verts;
    for (const Edge& e : g.edges) {
        verts.push_back(e.u);
        verts.push_back(e.v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    const std::size_t k = verts.size();
    REQUIRE(k <= 20);
    auto index_of = [&](VertexId v) {
        return std::lower_bound(verts.begin(), verts.end(), v) - verts.begin();
    };
    std::vector<std::uint32_t> adj(k, 0);
    for (const Edge& e : g.edges) {
        adj[index_of(e.u)] |= std::uint32_t(1) << index_of(e.v);
        adj[index_of(e.v)] |= std::uint32_t(1) << index_of(e.u);
    }
    std::vector<std::int8_t> best(std::size_t(1) << k, 0);
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << k); ++mask) {
        const unsigned v = static_cast<unsigned>(__builtin_ctz(mask));
        best[mask] = best[mask & (mask - 1)];  // v stays unmatched
        std::uint32_t partners = adj[v] & mask;
        while (partners) {
            const unsigned w = static_cast<unsigned>(__builtin_ctz(partners));
            partners &= partners - 1;
            if (w == v) continue;
            const std::uint32_t rest = mask & ~(std::uint32_t(1) << v) & ~(std::uint32_t(1) << w);
            best[mask] = std::max<std::int8_t>(best[mask], std::int8_t(1 + best[rest]));
        }
    }
    return static_cast<std::size_t>(best[(std::uint32_t(1) << k) - 1]);
}

// Random simple graph on n vertices with roughly the requested edge count.
EdgeStream random_graph_stream(VertexId n, std::size_t target_edges, std::uint64_t seed) {
    std::vector<std::pair<VertexId, VertexId>> all;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) all.emplace_back(u, v);
    Rng rng(seed);
    shuffle_in_place(all, rng);
    all.resize(std::min(target_edges, all.size()));
    return make_stream(all, n);
}

}  // namespace

TEST_CASE("edge normalizes endpoint order") {
    Edge a(3, 7);
    Edge b(7, 3);
    CHECK(a == b);
    CHECK(a.u == 3);
    CHECK(a.v == 7);
    CHECK(EdgeHash{}(a) == EdgeHash{}(b));
    CHECK_THROWS_AS(Edge(5, 5), std::invalid_argument);
}

TEST_CASE("validate accepts a well-formed stream unchanged") {
    EdgeStream s = make_stream({{0, 1}, {1, 2}}, 3);
    CHECK(s.size() == 2);
    CHECK(s.vertex_count() == 3);
    CHECK(s.edges()[0] == Edge(0, 1));
    CHECK(s.edges()[1] == Edge(1, 2));
}

TEST_CASE("validate reports the first offending position") {
    SUBCASE("self-loop") {
        try {
            make_stream({{0, 0}}, 1);
            FAIL("expected a validation error");
        } catch (const StreamValidationError& err) {
            CHECK(err.kind() == StreamValidationError::Kind::SelfLoop);
            CHECK(err.position() == 0);
        }
    }
    SUBCASE("duplicate under unordered-pair equality") {
        try {
            make_stream({{0, 1}, {1, 0}}, 2);
            FAIL("expected a validation error");
        } catch (const StreamValidationError& err) {
            CHECK(err.kind() == StreamValidationError::Kind::DuplicateEdge);
            CHECK(err.position() == 1);
        }
    }
    SUBCASE("vertex id beyond the declared count") {
        try {
            make_stream({{0, 1}, {1, 5}}, 3);
            FAIL("expected a validation error");
        } catch (const StreamValidationError& err) {
            CHECK(err.kind() == StreamValidationError::Kind::VertexOutOfRange);
            CHECK(err.position() == 1);
        }
    }
}

TEST_CASE("maximum matching on fixed instances") {
    CHECK(maximum_matching_size(Graph{4, {}}) == 0);
    CHECK(maximum_matching_size(make_stream({{0, 1}, {1, 2}, {2, 0}}, 3).to_graph()) == 1);
    CHECK(maximum_matching_size(make_stream({{0, 1}, {1, 2}, {2, 3}, {3, 4}}, 5).to_graph()) == 2);
    // K4 has a perfect matching.
    CHECK(maximum_matching_size(
              make_stream({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, 4).to_graph()) == 2);
    // Star: every edge shares the center.
    CHECK(maximum_matching_size(
              make_stream({{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}, 6).to_graph()) == 1);
    // Odd cycle: the non-bipartite case a bipartite-only method would miss.
    CHECK(maximum_matching_size(
              make_stream({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}, 5).to_graph()) == 2);
}

TEST_CASE("maximum matching respects its edge cap") {
    EdgeStream s = random_graph_stream(10, 30, 99);
    CHECK_THROWS_AS(maximum_matching_size(s.to_graph(), 24), InstanceTooLarge);
    CHECK_NOTHROW(maximum_matching_size(s.to_graph(), 30));
}

TEST_CASE("maximum matching agrees with an independent subset DP") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const VertexId n = 4 + seed % 7;  // up to 10 vertices
        const std::size_t edges = (seed * 7) % (std::size_t(n) * (n - 1) / 2 + 1);
        const Graph g = random_graph_stream(n, edges, 1000 + seed).to_graph();
        CAPTURE(seed);
        CHECK(maximum_matching_size(g, 64) == matching_by_subset_dp(g));
    }
}

TEST_CASE("matching size is bounded and order-invariant") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const EdgeStream s = random_graph_stream(9, 14, 500 + seed);
        const std::size_t match = maximum_matching_size(s.to_graph(), 64);
        CHECK(match <= s.vertex_count() / 2);
        CHECK(match <= s.size());
        const EdgeStream shuffled = shuffle_stream(s, seed * 31 + 1);
        CHECK(maximum_matching_size(shuffled.to_graph(), 64) == match);
    }
}

TEST_CASE("arboricity on fixed instances") {
    // Any tree is a single forest.
    CHECK(exact_arboricity(make_stream({{0, 1}, {1, 2}, {1, 3}, {3, 4}}, 5).to_graph()) == 1);
    CHECK(exact_arboricity(make_stream({{0, 1}, {1, 2}, {2, 0}}, 3).to_graph()) == 2);
    CHECK(exact_arboricity(
              make_stream({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, 4).to_graph()) == 2);
    CHECK_THROWS_AS(exact_arboricity(Graph{4, {}}), EmptyGraphError);
}

TEST_CASE("arboricity cap counts non-isolated vertices") {
    RawEdges path;
    for (VertexId v = 0; v + 1 < 17; ++v) path.emplace_back(v, v + 1);
    const Graph g = make_stream(path, 17).to_graph();
    CHECK_THROWS_AS(exact_arboricity(g), InstanceTooLarge);
    // Isolated vertices do not count against the cap.
    const Graph small = make_stream({{0, 1}}, 1000).to_graph();
    CHECK(exact_arboricity(small) == 1);
}

TEST_CASE("arboricity is at least the whole-graph density") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const EdgeStream s = random_graph_stream(8, 3 + seed % 18, 700 + seed);
        if (s.empty()) continue;
        const Graph g = s.to_graph();
        const std::size_t m = g.edges.size();
        CHECK(exact_arboricity(g) >= (m + g.n - 2) / (g.n - 1));
    }
}

TEST_CASE("forest-union generator") {
    SUBCASE("two vertices yield the only possible edge") {
        const EdgeStream s = generate_forest_union(2, 1, 42);
        REQUIRE(s.size() == 1);
        CHECK(s.edges()[0] == Edge(0, 1));
    }
    SUBCASE("deterministic per seed") {
        CHECK(generate_forest_union(10, 3, 7) == generate_forest_union(10, 3, 7));
        bool any_difference = false;
        for (std::uint64_t seed = 0; seed < 5 && !any_difference; ++seed)
            any_difference = !(generate_forest_union(10, 3, seed) ==
                               generate_forest_union(10, 3, seed + 100));
        CHECK(any_difference);
    }
    SUBCASE("output is a valid simple stream within range") {
        const EdgeStream s = generate_forest_union(12, 3, 5);
        RawEdges raw;
        for (const Edge& e : s.edges()) raw.emplace_back(e.u, e.v);
        CHECK_NOTHROW(EdgeStream::validate(raw, 12));
    }
    SUBCASE("arboricity never exceeds the requested bound") {
        for (std::uint64_t seed = 0; seed < 12; ++seed) {
            const VertexId n = 4 + seed % 9;  // 4..12
            const std::uint32_t alpha = 1 + seed % 3;
            const EdgeStream s = generate_forest_union(n, alpha, 9000 + seed);
            CAPTURE(n);
            CAPTURE(alpha);
            CHECK(exact_arboricity(s.to_graph()) <= alpha);
        }
    }
    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(generate_forest_union(1, 1, 0), std::invalid_argument);
        CHECK_THROWS_AS(generate_forest_union(5, 0, 0), std::invalid_argument);
    }
}

TEST_CASE("shuffle keeps the edge multiset and is deterministic") {
    const EdgeStream empty = make_stream({}, 3);
    CHECK(shuffle_stream(empty, 1) == empty);

    const EdgeStream single = make_stream({{0, 2}}, 3);
    CHECK(shuffle_stream(single, 1) == single);

    const EdgeStream s = random_graph_stream(8, 12, 3);
    const EdgeStream a = shuffle_stream(s, 17);
    CHECK(a == shuffle_stream(s, 17));

    std::multiset<std::uint64_t> before, after;
    for (const Edge& e : s.edges()) before.insert(e.key());
    for (const Edge& e : a.edges()) after.insert(e.key());
    CHECK(before == after);
}

TEST_CASE("serialize then validate is the identity") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const EdgeStream s = generate_forest_union(9, 2, 40 + seed);
        std::ostringstream out;
        write_edge_list(out, s);
        std::istringstream in(out.str());
        const EdgeListFile file = read_edge_list(in);
        REQUIRE(file.declared_n.has_value());
        const EdgeStream back = EdgeStream::validate(file.edges, *file.declared_n);
        CHECK(back == s);
    }
}
