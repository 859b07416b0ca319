#pragma once

#include "vgraph/errors.hpp"
#include "vgraph/instance.hpp"

#include <algorithm>
#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

namespace vgraph {

/*
 * A finite induced window onto a vector graph. Vertices are lexicographically
 * sorted, edges are index pairs (i < j) in sorted order, and the embedding is
 * aligned with the vertex list and exact. The edge list is definitional:
 * (i, j) is present exactly when the two lattice points differ by a
 * connection vector or its negation.
 */
struct FiniteGraph {
    VectorGraphInstance instance;
    std::vector<LatticePoint> vertices;
    std::vector<std::pair<int, int>> edges;
    std::vector<XYVec> embedding;

    int n() const { return static_cast<int>(vertices.size()); }

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(vertices.size());
        for (const auto& [i, j] : edges) {
            adj[static_cast<std::size_t>(i)].push_back(j);
            adj[static_cast<std::size_t>(j)].push_back(i);
        }
        return adj;
    }

    bool operator==(const FiniteGraph& o) const = default;
};

namespace detail {

// Assemble the canonical FiniteGraph over a distinct point set: sort, index,
// probe each +connection once so every induced edge appears exactly once.
inline FiniteGraph assemble_graph(const VectorGraphInstance& inst, std::vector<LatticePoint> points) {
    std::sort(points.begin(), points.end());
    FiniteGraph g;
    g.instance = inst;
    g.vertices = std::move(points);
    std::unordered_map<LatticePoint, int, LatticePointHash> index;
    index.reserve(g.vertices.size() * 2);
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        index.emplace(g.vertices[i], static_cast<int>(i));
    }
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        for (const LatticePoint& s : inst.connections) {
            auto it = index.find(g.vertices[i] + s);
            if (it == index.end()) continue;
            const int a = static_cast<int>(i);
            const int b = it->second;
            g.edges.emplace_back(std::min(a, b), std::max(a, b));
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    g.embedding.reserve(g.vertices.size());
    for (const LatticePoint& p : g.vertices) g.embedding.push_back(embed(inst, p));
    return g;
}

} // namespace detail

// All vertices at graph distance <= radius from center, with induced edges.
// Breadth-first layer by layer; the output order is lexicographic regardless
// of traversal order, so runs are reproducible.
inline FiniteGraph ball(const VectorGraphInstance& inst, const LatticePoint& center, int radius) {
    if (radius < 0) throw ValidationError("ball radius must be nonnegative");
    if (center.rank() != inst.rank) {
        throw DimensionError("center rank does not match instance rank");
    }
    std::unordered_map<LatticePoint, int, LatticePointHash> dist;
    dist.emplace(center, 0);
    std::vector<LatticePoint> frontier{center};
    for (int r = 0; r < radius; ++r) {
        std::vector<LatticePoint> next;
        for (const LatticePoint& p : frontier) {
            for (const LatticePoint& s : inst.connections) {
                for (const LatticePoint& q : {p + s, p - s}) {
                    if (dist.emplace(q, r + 1).second) next.push_back(q);
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<LatticePoint> points;
    points.reserve(dist.size());
    for (const auto& [p, d] : dist) points.push_back(p);
    return detail::assemble_graph(inst, std::move(points));
}

// Induced subgraph on exactly the given points.
inline FiniteGraph induced_subgraph(const VectorGraphInstance& inst, std::vector<LatticePoint> points) {
    for (const LatticePoint& p : points) {
        if (p.rank() != inst.rank) throw DimensionError("point rank does not match instance rank");
    }
    std::vector<LatticePoint> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ValidationError("induced subgraph points must be pairwise distinct");
    }
    return detail::assemble_graph(inst, std::move(sorted));
}

// Audit tool: every index pair whose exact embedded distance is 1. For a
// valid instance this is a superset of the edge list; on exotic point sets
// it may be strictly larger. Quadratic in the vertex count.
inline std::vector<std::pair<int, int>> unit_distance_pairs(const FiniteGraph& g) {
    std::vector<std::pair<int, int>> out;
    const int n = g.n();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (is_unit(g.embedding[static_cast<std::size_t>(i)] - g.embedding[static_cast<std::size_t>(j)])) {
                out.emplace_back(i, j);
            }
        }
    }
    return out;
}

} // namespace vgraph
