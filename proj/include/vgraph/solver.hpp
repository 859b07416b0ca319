#pragma once

#include "vgraph/errors.hpp"
#include "vgraph/finite_graph.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace vgraph {

struct ColoringResult {
    int num_colors = 0;
    std::vector<int> assignment;  // colors 0..num_colors-1, every edge bichromatic
    bool optimal = false;
};

struct CliqueResult {
    int size = 0;
    std::vector<int> members;
};

struct KColorResult {
    bool colorable = false;
    std::vector<int> witness;   // proper k-coloring when colorable
    bool exhausted = false;     // search completed with no coloring found
    std::uint64_t nodes = 0;    // decision nodes explored
};

struct SolverOptions {
    // Soft cap on exact solves. Configuration, not an architectural limit.
    std::size_t max_vertices = 2000;
};

namespace detail {

inline std::vector<std::vector<int>> adjacency_of(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& [i, j] : edges) {
        adj[static_cast<std::size_t>(i)].push_back(j);
        adj[static_cast<std::size_t>(j)].push_back(i);
    }
    for (auto& row : adj) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    return adj;
}

inline void check_proper(const std::vector<std::pair<int, int>>& edges, const std::vector<int>& color) {
    for (const auto& [i, j] : edges) {
        if (color[static_cast<std::size_t>(i)] == color[static_cast<std::size_t>(j)]) {
            throw Error("internal: produced coloring is not proper");
        }
    }
}

/*
 * Backtracking k-colorability with forward checking. Color domains are
 * bitmasks; assigning a vertex strikes its color from every uncolored
 * neighbor, and an emptied domain fails the branch immediately. The branch
 * vertex is the uncolored one with the fewest remaining colors, ties to the
 * lowest index, and colors are tried in ascending order, so the search is
 * deterministic and the first witness found is always the same.
 */
class KColorSearch {
public:
    KColorSearch(int n, const std::vector<std::vector<int>>& adj, int k)
        : n_(n), k_(k), adj_(adj), color_(static_cast<std::size_t>(n), -1),
          domain_(static_cast<std::size_t>(n), k >= 64 ? ~0ull : (1ull << k) - 1) {}

    // Forces vertex -> color before the search proper. Returns false when the
    // forced assignments already wipe out a domain.
    bool seed(int v, int c) {
        trail_.clear();
        return assign(v, c);
    }

    KColorResult run() {
        KColorResult res;
        res.colorable = recurse(res.nodes);
        if (res.colorable) {
            res.witness = color_;
        } else {
            res.exhausted = true;
        }
        return res;
    }

    static KColorResult infeasible_seed() { return {false, {}, true, 0}; }

private:
    bool assign(int v, int c) {
        color_[static_cast<std::size_t>(v)] = c;
        for (int w : adj_[static_cast<std::size_t>(v)]) {
            const auto wi = static_cast<std::size_t>(w);
            if (color_[wi] != -1 || !(domain_[wi] >> c & 1ull)) continue;
            domain_[wi] &= ~(1ull << c);
            trail_.push_back(w);
            if (domain_[wi] == 0) return false;
        }
        return true;
    }

    void rollback(int v, int c, std::size_t trail_mark) {
        color_[static_cast<std::size_t>(v)] = -1;
        while (trail_.size() > trail_mark) {
            domain_[static_cast<std::size_t>(trail_.back())] |= 1ull << c;
            trail_.pop_back();
        }
    }

    int pick_vertex() const {
        int best = -1;
        int best_size = k_ + 1;
        for (int v = 0; v < n_; ++v) {
            if (color_[static_cast<std::size_t>(v)] != -1) continue;
            const int size = __builtin_popcountll(domain_[static_cast<std::size_t>(v)]);
            if (size < best_size) {
                best = v;
                best_size = size;
                if (size == 1) break;
            }
        }
        return best;
    }

    bool recurse(std::uint64_t& nodes) {
        ++nodes;
        const int v = pick_vertex();
        if (v == -1) return true;
        std::uint64_t dom = domain_[static_cast<std::size_t>(v)];
        for (int c = 0; dom; ++c, dom >>= 1) {
            if (!(dom & 1ull)) continue;
            const std::size_t mark = trail_.size();
            if (assign(v, c) && recurse(nodes)) return true;
            rollback(v, c, mark);
        }
        return false;
    }

    int n_;
    int k_;
    const std::vector<std::vector<int>>& adj_;
    std::vector<int> color_;
    std::vector<std::uint64_t> domain_;
    std::vector<int> trail_;
};

inline KColorResult k_colorable_seeded(int n, const std::vector<std::vector<int>>& adj, int k,
                                       const std::vector<std::pair<int, int>>& precolor) {
    if (k >= n) {
        // Colors outnumber vertices; the identity assignment is a witness.
        KColorResult res;
        res.colorable = true;
        res.witness.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) res.witness[static_cast<std::size_t>(v)] = v;
        for (const auto& [v, c] : precolor) res.witness[static_cast<std::size_t>(v)] = c;
        return res;
    }
    if (k >= 64) throw ResourceError("color counts above 63 are not supported");
    KColorSearch search(n, adj, k);
    for (const auto& [v, c] : precolor) {
        if (!search.seed(v, c)) return KColorSearch::infeasible_seed();
    }
    return search.run();
}

} // namespace detail

// First-fit coloring along the given vertex order. Heuristic upper bound.
inline ColoringResult greedy_coloring(int n, const std::vector<std::pair<int, int>>& edges,
                                      const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != n) throw ValidationError("order must list every vertex exactly once");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : order) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
            throw ValidationError("order is not a permutation of the vertex indices");
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
    const auto adj = detail::adjacency_of(n, edges);
    ColoringResult res;
    res.assignment.assign(static_cast<std::size_t>(n), -1);
    std::vector<char> used;
    for (int v : order) {
        used.assign(static_cast<std::size_t>(n) + 1, 0);
        for (int w : adj[static_cast<std::size_t>(v)]) {
            const int c = res.assignment[static_cast<std::size_t>(w)];
            if (c >= 0) used[static_cast<std::size_t>(c)] = 1;
        }
        int c = 0;
        while (used[static_cast<std::size_t>(c)]) ++c;
        res.assignment[static_cast<std::size_t>(v)] = c;
        res.num_colors = std::max(res.num_colors, c + 1);
    }
    if (n == 0) res.num_colors = 0;
    detail::check_proper(edges, res.assignment);
    return res;
}

// Saturation-degree heuristic. Next vertex: highest saturation, then highest
// degree, then lowest index; colored first-fit.
inline ColoringResult dsatur(int n, const std::vector<std::pair<int, int>>& edges) {
    const auto adj = detail::adjacency_of(n, edges);
    ColoringResult res;
    res.assignment.assign(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<char>> neighbor_colors(static_cast<std::size_t>(n),
                                                   std::vector<char>(static_cast<std::size_t>(n) + 1, 0));
    std::vector<int> saturation(static_cast<std::size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
        int v = -1;
        for (int u = 0; u < n; ++u) {
            const auto ui = static_cast<std::size_t>(u);
            if (res.assignment[ui] != -1) continue;
            if (v == -1) {
                v = u;
                continue;
            }
            const auto vi = static_cast<std::size_t>(v);
            if (saturation[ui] > saturation[vi] ||
                (saturation[ui] == saturation[vi] && adj[ui].size() > adj[vi].size())) {
                v = u;
            }
        }
        const auto vi = static_cast<std::size_t>(v);
        int c = 0;
        while (neighbor_colors[vi][static_cast<std::size_t>(c)]) ++c;
        res.assignment[vi] = c;
        res.num_colors = std::max(res.num_colors, c + 1);
        for (int w : adj[vi]) {
            const auto wi = static_cast<std::size_t>(w);
            if (!neighbor_colors[wi][static_cast<std::size_t>(c)]) {
                neighbor_colors[wi][static_cast<std::size_t>(c)] = 1;
                ++saturation[wi];
            }
        }
    }
    detail::check_proper(edges, res.assignment);
    return res;
}

// Exact maximum clique by branch and bound. Candidates are kept in ascending
// index order and pruned by size, so the witness is deterministic.
inline CliqueResult max_clique(int n, const std::vector<std::pair<int, int>>& edges) {
    const auto adj = detail::adjacency_of(n, edges);
    const auto adjacent = [&](int a, int b) {
        const auto& row = adj[static_cast<std::size_t>(a)];
        return std::binary_search(row.begin(), row.end(), b);
    };
    std::vector<int> best;
    std::vector<int> current;
    const auto expand = [&](auto&& self, const std::vector<int>& candidates) -> void {
        if (current.size() + candidates.size() <= best.size()) return;
        if (candidates.empty()) {
            best = current;
            return;
        }
        for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
            if (current.size() + (candidates.size() - idx) <= best.size()) return;
            const int v = candidates[idx];
            std::vector<int> next;
            for (std::size_t later = idx + 1; later < candidates.size(); ++later) {
                if (adjacent(v, candidates[later])) next.push_back(candidates[later]);
            }
            current.push_back(v);
            self(self, next);
            current.pop_back();
        }
    };
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
    expand(expand, all);
    return {static_cast<int>(best.size()), std::move(best)};
}

// Exact k-colorability decision. A witness is returned when colorable; a
// refutation is reported as an exhausted search.
inline KColorResult k_colorable(int n, const std::vector<std::pair<int, int>>& edges, int k,
                                const SolverOptions& opts = {}) {
    if (k < 1) throw ValidationError("color count must be positive");
    if (static_cast<std::size_t>(n) > opts.max_vertices) {
        throw ResourceError("graph has " + std::to_string(n) + " vertices, above the cap of " +
                            std::to_string(opts.max_vertices));
    }
    const auto adj = detail::adjacency_of(n, edges);
    KColorResult res = detail::k_colorable_seeded(n, adj, k, {});
    if (res.colorable) detail::check_proper(edges, res.witness);
    return res;
}

/*
 * Exact chromatic number: iterate k-colorability upward from the clique
 * lower bound. One maximum clique is pre-colored with distinct colors, which
 * is sound (color classes are interchangeable) and prunes the color
 * permutations of the raw search. Every accepted witness is audited
 * edge-wise before being returned.
 */
inline ColoringResult chromatic_number(int n, const std::vector<std::pair<int, int>>& edges,
                                       const SolverOptions& opts = {}) {
    if (static_cast<std::size_t>(n) > opts.max_vertices) {
        // Polynomial bounds are still affordable; report them in the error.
        const CliqueResult clique = max_clique(n, edges);
        const ColoringResult ub = dsatur(n, edges);
        throw ResourceError("graph has " + std::to_string(n) + " vertices, above the cap of " +
                                std::to_string(opts.max_vertices) + "; chi is in [" +
                                std::to_string(clique.size) + ", " + std::to_string(ub.num_colors) + "]",
                            clique.size, ub.num_colors);
    }
    if (n == 0) return {0, {}, true};
    const auto adj = detail::adjacency_of(n, edges);
    const CliqueResult clique = max_clique(n, edges);
    std::vector<std::pair<int, int>> precolor;
    precolor.reserve(clique.members.size());
    for (std::size_t i = 0; i < clique.members.size(); ++i) {
        precolor.emplace_back(clique.members[i], static_cast<int>(i));
    }
    for (int k = std::max(1, clique.size);; ++k) {
        const KColorResult attempt = detail::k_colorable_seeded(n, adj, k, precolor);
        if (attempt.colorable) {
            detail::check_proper(edges, attempt.witness);
            return {k, attempt.witness, true};
        }
    }
}

inline ColoringResult greedy_coloring(const FiniteGraph& g, const std::vector<int>& order) {
    return greedy_coloring(g.n(), g.edges, order);
}
inline ColoringResult dsatur(const FiniteGraph& g) { return dsatur(g.n(), g.edges); }
inline CliqueResult max_clique(const FiniteGraph& g) { return max_clique(g.n(), g.edges); }
inline KColorResult k_colorable(const FiniteGraph& g, int k, const SolverOptions& opts = {}) {
    return k_colorable(g.n(), g.edges, k, opts);
}
inline ColoringResult chromatic_number(const FiniteGraph& g, const SolverOptions& opts = {}) {
    return chromatic_number(g.n(), g.edges, opts);
}

} // namespace vgraph
