#pragma once

#include "vgraph/rational.hpp"

#include <utility>
#include <vector>

namespace vgraph {

// Rank of an integer matrix by fraction-free (Bareiss) Gaussian elimination.
// Every intermediate entry is a minor of the input, so the single-step
// division is exact and entries stay bounded. Rows are consumed in order;
// columns without a usable pivot are skipped.
inline int fraction_free_rank(std::vector<std::vector<BigInt>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    BigInt prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) std::swap(m[pivot], m[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
            }
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return static_cast<int>(rank);
}

// Rank over the rationals. Denominators are cleared row by row (scaling a row
// does not change the rank) and the integer elimination does the rest.
inline int rational_matrix_rank(const std::vector<std::vector<Rational>>& m) {
    std::vector<std::vector<BigInt>> cleared;
    cleared.reserve(m.size());
    for (const auto& row : m) {
        BigInt lcm = 1;
        for (const Rational& x : row) {
            const BigInt d = rational_den(x);
            lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
        }
        std::vector<BigInt> out;
        out.reserve(row.size());
        for (const Rational& x : row) {
            out.push_back(rational_num(x) * (lcm / rational_den(x)));
        }
        cleared.push_back(std::move(out));
    }
    return fraction_free_rank(std::move(cleared));
}

} // namespace vgraph
