#pragma once

#include "vgraph/errors.hpp"
#include "vgraph/finite_graph.hpp"
#include "vgraph/instance.hpp"

#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

namespace vgraph {

/*
 * A coloring of lattice points of the form f(v) = w . v mod m. Evaluation is
 * a group homomorphism, so f is proper on the whole infinite graph exactly
 * when no connection vector maps to zero.
 */
struct LinearColoring {
    int modulus;
    std::vector<int> weights;  // canonicalized into [0, m)

    LinearColoring(int m, std::vector<int> w) : modulus(m), weights(std::move(w)) {
        if (modulus < 2) throw ValidationError("modulus must be at least 2");
        for (int& x : weights) {
            x %= modulus;
            if (x < 0) x += modulus;
        }
    }
};

// Nonnegative residue of w . p mod m.
inline int eval_linear(const LinearColoring& col, const LatticePoint& p) {
    if (p.rank() != static_cast<int>(col.weights.size())) {
        throw DimensionError("point rank does not match weight count");
    }
    std::int64_t sum = 0;
    for (int i = 0; i < p.rank(); ++i) {
        sum += static_cast<std::int64_t>(col.weights[static_cast<std::size_t>(i)]) * p[i];
    }
    const int m = col.modulus;
    int r = static_cast<int>(sum % m);
    return r < 0 ? r + m : r;
}

// Properness on the infinite graph reduces to the generators: by linearity a
// conflicting edge exists exactly when some connection vector maps to zero.
inline bool is_proper_linear(const LinearColoring& col, const VectorGraphInstance& inst) {
    if (inst.rank != static_cast<int>(col.weights.size())) {
        throw DimensionError("weight count does not match instance rank");
    }
    for (const LatticePoint& s : inst.connections) {
        if (eval_linear(col, s) == 0) return false;
    }
    return true;
}

/*
 * All weight tuples in [0, m)^rank whose linear coloring is proper, in
 * lexicographic order. The sweep is complete (no symmetry reduction). The
 * candidate space may be split across threads; chunks are contiguous
 * lexicographic ranges, so the merged output does not depend on the thread
 * count.
 */
inline std::vector<std::vector<int>> search_linear(const VectorGraphInstance& inst, int m, int threads = 1) {
    if (m < 2) throw ValidationError("modulus must be at least 2");
    if (threads < 1) throw ValidationError("thread count must be positive");
    const int n = inst.rank;
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        total *= static_cast<std::uint64_t>(m);
        if (total > 100'000'000ull) {
            throw ResourceError("search space exceeds 1e8 weight tuples");
        }
    }

    // Weight tuple of candidate index k, digits most-significant-first so
    // that index order is lexicographic order.
    const auto tuple_of = [&](std::uint64_t k) {
        std::vector<int> w(static_cast<std::size_t>(n));
        for (int i = n - 1; i >= 0; --i) {
            w[static_cast<std::size_t>(i)] = static_cast<int>(k % static_cast<std::uint64_t>(m));
            k /= static_cast<std::uint64_t>(m);
        }
        return w;
    };
    const auto sweep = [&](std::uint64_t begin, std::uint64_t end, std::vector<std::vector<int>>& hits) {
        for (std::uint64_t k = begin; k < end; ++k) {
            std::vector<int> w = tuple_of(k);
            bool proper = true;
            for (const LatticePoint& s : inst.connections) {
                std::int64_t sum = 0;
                for (int i = 0; i < n; ++i) sum += static_cast<std::int64_t>(w[static_cast<std::size_t>(i)]) * s[i];
                int r = static_cast<int>(sum % m);
                if (r < 0) r += m;
                if (r == 0) {
                    proper = false;
                    break;
                }
            }
            if (proper) hits.push_back(std::move(w));
        }
    };

    const std::uint64_t workers = std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), total ? total : 1);
    if (workers <= 1) {
        std::vector<std::vector<int>> hits;
        sweep(0, total, hits);
        return hits;
    }
    std::vector<std::vector<std::vector<int>>> parts(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint64_t t = 0; t < workers; ++t) {
        const std::uint64_t begin = total * t / workers;
        const std::uint64_t end = total * (t + 1) / workers;
        pool.emplace_back([&, begin, end, t] { sweep(begin, end, parts[t]); });
    }
    for (auto& th : pool) th.join();
    std::vector<std::vector<int>> hits;
    for (auto& part : parts) {
        for (auto& w : part) hits.push_back(std::move(w));
    }
    return hits;
}

// Brute-force edge-wise properness check on a finite window, independent of
// the generator shortcut above. Returns the conflicting edges.
inline std::vector<std::pair<int, int>> verify_on_graph(const LinearColoring& col, const FiniteGraph& g) {
    if (g.instance.rank != static_cast<int>(col.weights.size())) {
        throw DimensionError("weight count does not match graph rank");
    }
    std::vector<int> color;
    color.reserve(g.vertices.size());
    for (const LatticePoint& p : g.vertices) color.push_back(eval_linear(col, p));
    std::vector<std::pair<int, int>> conflicts;
    for (const auto& [i, j] : g.edges) {
        if (color[static_cast<std::size_t>(i)] == color[static_cast<std::size_t>(j)]) {
            conflicts.emplace_back(i, j);
        }
    }
    return conflicts;
}

} // namespace vgraph
