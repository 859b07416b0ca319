#pragma once

#include "vgraph/errors.hpp"
#include "vgraph/finite_graph.hpp"
#include "vgraph/instance.hpp"
#include "vgraph/lattice.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

namespace vgraph {

struct SpindleEmbedding {
    VectorGraphInstance instance;
    std::vector<LatticePoint> points;  // role order 0..6
    int role_of_anchor = 0;
    LatticePoint anchor;
};

struct SpindleCheck {
    bool pass = false;
    std::string failure;  // empty when pass
};

namespace detail {

// The eleven edges of the spindle in role space, lexicographic.
inline const std::vector<std::pair<int, int>>& spindle_role_edges() {
    static const std::vector<std::pair<int, int>> edges = {
        {0, 1}, {0, 2}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {2, 3}, {3, 6}, {4, 5}, {4, 6}, {5, 6}};
    return edges;
}

} // namespace detail

/*
 * The seven-vertex rigid subgraph at the origin: two rhombi sharing the
 * apex, the far tips one unit apart. Role 0 is the shared apex, roles 1-3
 * walk the upper rhombus, roles 4-6 the lower one.
 */
inline SpindleEmbedding canonical_spindle() {
    SpindleEmbedding s;
    s.instance = moser_instance();
    s.points = {
        LatticePoint{0, 0, 0, 0},   // apex
        LatticePoint{1, 0, 0, 0},   // apex + alpha
        LatticePoint{0, 0, 1, 0},   // apex + beta
        LatticePoint{1, 0, 1, 0},   // apex + alpha + beta
        LatticePoint{0, -1, 0, 0},  // apex - conj alpha
        LatticePoint{0, 0, 0, -1},  // apex - conj beta
        LatticePoint{0, -1, 0, -1}, // apex - conj alpha - conj beta
    };
    s.role_of_anchor = 0;
    s.anchor = LatticePoint::zero(4);
    return s;
}

// Translate the canonical spindle so that the vertex in the given role lands
// on v. Every vertex can play every role this way.
inline SpindleEmbedding spindle_at(const LatticePoint& v, int role) {
    if (role < 0 || role > 6) throw ValidationError("spindle role must be in 0..6");
    if (v.rank() != 4) throw DimensionError("spindle anchors have rank 4");
    SpindleEmbedding s = canonical_spindle();
    const LatticePoint shift = v - s.points[static_cast<std::size_t>(role)];
    for (auto& p : s.points) p = p + shift;
    s.role_of_anchor = role;
    s.anchor = v;
    return s;
}

/*
 * Audit an embedding claim from scratch. In order: the seven points must be
 * distinct; the instance adjacency among them must give exactly the eleven
 * reference edges; each edge must be exactly unit length in the plane; and
 * the induced graph must be isomorphic to the reference spindle. The first
 * violated condition is reported.
 */
inline SpindleCheck verify_spindle(const SpindleEmbedding& s) {
    if (s.points.size() != 7) return {false, "expected 7 points, got " + std::to_string(s.points.size())};
    for (const auto& p : s.points) {
        if (p.rank() != s.instance.rank) return {false, "point rank does not match the instance"};
    }
    for (std::size_t i = 0; i < 7; ++i) {
        for (std::size_t j = i + 1; j < 7; ++j) {
            if (s.points[i] == s.points[j]) {
                return {false, "points " + std::to_string(i) + " and " + std::to_string(j) + " coincide"};
            }
        }
    }

    std::vector<std::pair<int, int>> induced;
    for (int i = 0; i < 7; ++i) {
        for (int j = i + 1; j < 7; ++j) {
            if (is_adjacent(s.instance, s.points[static_cast<std::size_t>(i)],
                            s.points[static_cast<std::size_t>(j)])) {
                induced.emplace_back(i, j);
            }
        }
    }
    if (induced.size() != 11) {
        return {false, "induced subgraph has " + std::to_string(induced.size()) + " edges, expected 11"};
    }

    for (const auto& [i, j] : induced) {
        const XYVec d = embed(s.instance, s.points[static_cast<std::size_t>(i)]) -
                        embed(s.instance, s.points[static_cast<std::size_t>(j)]);
        if (!is_unit(d)) {
            return {false, "edge " + std::to_string(i) + "-" + std::to_string(j) +
                               " is not unit length in the plane"};
        }
    }

    // Isomorphism to the reference spindle, by degree-pruned backtracking
    // over role assignments.
    const auto& ref = detail::spindle_role_edges();
    std::array<std::array<char, 7>, 7> ref_adj{};
    std::array<std::array<char, 7>, 7> got_adj{};
    std::array<int, 7> ref_deg{};
    std::array<int, 7> got_deg{};
    for (const auto& [i, j] : ref) {
        ref_adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
        ref_adj[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = 1;
        ++ref_deg[static_cast<std::size_t>(i)];
        ++ref_deg[static_cast<std::size_t>(j)];
    }
    for (const auto& [i, j] : induced) {
        got_adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
        got_adj[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = 1;
        ++got_deg[static_cast<std::size_t>(i)];
        ++got_deg[static_cast<std::size_t>(j)];
    }
    std::array<int, 7> map{};  // reference role -> point index
    map.fill(-1);
    std::array<char, 7> used{};
    const auto extend = [&](auto&& self, int role) -> bool {
        if (role == 7) return true;
        for (int v = 0; v < 7; ++v) {
            const auto vi = static_cast<std::size_t>(v);
            if (used[vi] || got_deg[vi] != ref_deg[static_cast<std::size_t>(role)]) continue;
            bool ok = true;
            for (int prev = 0; prev < role && ok; ++prev) {
                const auto pi = static_cast<std::size_t>(map[static_cast<std::size_t>(prev)]);
                ok = ref_adj[static_cast<std::size_t>(role)][static_cast<std::size_t>(prev)] == got_adj[vi][pi];
            }
            if (!ok) continue;
            map[static_cast<std::size_t>(role)] = v;
            used[vi] = 1;
            if (self(self, role + 1)) return true;
            used[vi] = 0;
            map[static_cast<std::size_t>(role)] = -1;
        }
        return false;
    };
    if (!extend(extend, 0)) return {false, "induced subgraph is not isomorphic to the reference spindle"};
    return {true, ""};
}

} // namespace vgraph
