#include <catch2/catch_amalgamated.hpp>

#include <vgraph/finite_graph.hpp>
#include <vgraph/instance.hpp>

#include <algorithm>
#include <unordered_set>

using namespace vgraph;

TEST_CASE("moser ball sizes match the independently computed table") {
    // Vertex and edge counts fixed by a standalone breadth-first prototype.
    const int want_vertices[5] = {1, 15, 101, 383, 1051};
    const int want_edges[5] = {0, 26, 334, 1632, 5090};
    const VectorGraphInstance inst = moser_instance();
    for (int r = 0; r <= 4; ++r) {
        const FiniteGraph g = ball(inst, LatticePoint::zero(4), r);
        CHECK(g.n() == want_vertices[r]);
        CHECK(static_cast<int>(g.edges.size()) == want_edges[r]);
    }
}

TEST_CASE("zsquare ball sizes match the diamond counts") {
    const VectorGraphInstance inst = zsquare_instance();
    CHECK(ball(inst, LatticePoint::zero(2), 1).n() == 5);
    CHECK(ball(inst, LatticePoint::zero(2), 1).edges.size() == 4);
    CHECK(ball(inst, LatticePoint::zero(2), 3).n() == 25);
    CHECK(ball(inst, LatticePoint::zero(2), 3).edges.size() == 36);
    CHECK(ball(inst, LatticePoint::zero(2), 5).n() == 61);
}

TEST_CASE("ball rejects bad arguments") {
    const VectorGraphInstance inst = moser_instance();
    CHECK_THROWS_AS(ball(inst, LatticePoint::zero(4), -1), ValidationError);
    CHECK_THROWS_AS(ball(inst, LatticePoint{0, 0}, 1), DimensionError);
}

TEST_CASE("balls are nested and deterministic") {
    const VectorGraphInstance inst = moser_instance();
    for (int r = 0; r <= 3; ++r) {
        const FiniteGraph inner = ball(inst, LatticePoint::zero(4), r);
        const FiniteGraph outer = ball(inst, LatticePoint::zero(4), r + 1);
        CHECK(std::includes(outer.vertices.begin(), outer.vertices.end(), inner.vertices.begin(),
                            inner.vertices.end()));
    }
    const FiniteGraph a = ball(inst, LatticePoint::zero(4), 3);
    const FiniteGraph b = ball(inst, LatticePoint::zero(4), 3);
    CHECK(a == b);
    CHECK(std::is_sorted(a.vertices.begin(), a.vertices.end()));
}

TEST_CASE("balls translate with their center") {
    const VectorGraphInstance inst = moser_instance();
    const LatticePoint shift{2, -1, 0, 3};
    const FiniteGraph at_zero = ball(inst, LatticePoint::zero(4), 2);
    const FiniteGraph moved = ball(inst, shift, 2);
    REQUIRE(moved.n() == at_zero.n());
    CHECK(moved.edges == at_zero.edges);
    for (int i = 0; i < at_zero.n(); ++i) {
        CHECK(moved.vertices[static_cast<std::size_t>(i)] ==
              at_zero.vertices[static_cast<std::size_t>(i)] + shift);
    }
}

TEST_CASE("every emitted edge has exact unit length") {
    const VectorGraphInstance inst = moser_instance();
    for (int r = 0; r <= 3; ++r) {
        const FiniteGraph g = ball(inst, LatticePoint::zero(4), r);
        for (const auto& [i, j] : g.edges) {
            CHECK(is_unit(g.embedding[static_cast<std::size_t>(i)] -
                          g.embedding[static_cast<std::size_t>(j)]));
        }
    }
}

TEST_CASE("distinct lattice points get distinct embeddings") {
    const FiniteGraph g = ball(moser_instance(), LatticePoint::zero(4), 3);
    std::unordered_set<std::string> seen;
    for (const auto& p : g.embedding) seen.insert(to_string(p));
    CHECK(static_cast<int>(seen.size()) == g.n());
}

TEST_CASE("edge lists agree with pairwise adjacency") {
    const VectorGraphInstance inst = moser_instance();
    const FiniteGraph g = ball(inst, LatticePoint::zero(4), 2);
    std::size_t count = 0;
    for (int i = 0; i < g.n(); ++i) {
        for (int j = i + 1; j < g.n(); ++j) {
            const bool adj = is_adjacent(inst, g.vertices[static_cast<std::size_t>(i)],
                                         g.vertices[static_cast<std::size_t>(j)]);
            const bool listed = std::binary_search(g.edges.begin(), g.edges.end(), std::make_pair(i, j));
            CHECK(adj == listed);
            if (listed) ++count;
        }
    }
    CHECK(count == g.edges.size());
}

TEST_CASE("induced subgraphs carry exactly the connection-set edges") {
    const VectorGraphInstance inst = moser_instance();
    const FiniteGraph triangle = induced_subgraph(
        inst, {LatticePoint::zero(4), LatticePoint{1, 0, 0, 0}, LatticePoint{0, 0, 1, 0}});
    CHECK(triangle.n() == 3);
    CHECK(triangle.edges.size() == 3);

    CHECK(induced_subgraph(inst, {LatticePoint::zero(4)}).edges.empty());

    CHECK_THROWS_AS(induced_subgraph(inst, {LatticePoint::zero(4), LatticePoint::zero(4)}),
                    ValidationError);
    CHECK_THROWS_AS(induced_subgraph(inst, {LatticePoint{0, 0}}), DimensionError);
}

TEST_CASE("unit distance audit never misses an edge") {
    const VectorGraphInstance inst = moser_instance();
    const FiniteGraph g = ball(inst, LatticePoint::zero(4), 1);
    const auto pairs = unit_distance_pairs(g);
    for (const auto& e : g.edges) {
        CHECK(std::find(pairs.begin(), pairs.end(), e) != pairs.end());
    }

    const FiniteGraph grid = ball(zsquare_instance(), LatticePoint::zero(2), 1);
    CHECK(unit_distance_pairs(grid) == grid.edges);
}

TEST_CASE("interior vertices of moser balls are 14-regular") {
    const VectorGraphInstance inst = moser_instance();
    const FiniteGraph outer = ball(inst, LatticePoint::zero(4), 3);
    const FiniteGraph inner = ball(inst, LatticePoint::zero(4), 2);
    const auto adj = outer.adjacency();
    for (const auto& v : inner.vertices) {
        const auto it = std::lower_bound(outer.vertices.begin(), outer.vertices.end(), v);
        REQUIRE(it != outer.vertices.end());
        const auto idx = static_cast<std::size_t>(it - outer.vertices.begin());
        CHECK(adj[idx].size() == 14);
    }
}
