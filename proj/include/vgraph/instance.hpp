#pragma once

#include "vgraph/errors.hpp"
#include "vgraph/lattice.hpp"
#include "vgraph/qlinalg.hpp"
#include "vgraph/qreal.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace vgraph {

/*
 * A vector graph: the vertex set is the integer span of a designated
 * generator basis, and two vertices are adjacent exactly when their
 * difference (or its negation) lies in the connection set. Both the basis
 * images and the connection set are held exactly, so adjacency and unit
 * distance are decided symbolically.
 */
struct VectorGraphInstance {
    std::string name;
    int rank = 0;
    std::vector<XYVec> basis_embed;          // exact image of each generator
    std::vector<LatticePoint> connections;   // generator coordinates

    bool operator==(const VectorGraphInstance& o) const = default;
};

// Exact planar image of a lattice point.
inline XYVec embed(const VectorGraphInstance& inst, const LatticePoint& p) {
    if (p.rank() != inst.rank) {
        throw DimensionError("point rank " + std::to_string(p.rank()) + " does not match instance rank " +
                             std::to_string(inst.rank));
    }
    XYVec out;
    for (int i = 0; i < inst.rank; ++i) {
        if (p[i] != 0) out = out + inst.basis_embed[static_cast<std::size_t>(i)] * p[i];
    }
    return out;
}

// Pure lattice comparison; no floating point and no embedding involved.
inline bool is_adjacent(const VectorGraphInstance& inst, const LatticePoint& p, const LatticePoint& q) {
    const LatticePoint d = p - q;
    if (d.rank() != inst.rank) {
        throw DimensionError("adjacency query rank does not match instance rank");
    }
    for (const LatticePoint& s : inst.connections) {
        if (d == s || d == -s) return true;
    }
    return false;
}

// All lattice neighbors of p, deduplicated and lexicographically sorted.
inline std::vector<LatticePoint> neighbors(const VectorGraphInstance& inst, const LatticePoint& p) {
    if (p.rank() != inst.rank) {
        throw DimensionError("point rank does not match instance rank");
    }
    std::set<LatticePoint> out;
    for (const LatticePoint& s : inst.connections) {
        out.insert(p + s);
        out.insert(p - s);
    }
    return {out.begin(), out.end()};
}

/*
 * Decides whether the lattice-to-plane embedding is injective. Each basis
 * generator contributes one column; its x and y coordinates are expanded on
 * the field basis {1, sqrt3, sqrt11, sqrt33}, giving an 8-row rational
 * matrix. The embedding kills no nonzero integer tuple exactly when that
 * matrix has full column rank over the rationals, which the fraction-free
 * elimination decides exactly.
 */
inline bool verify_unique_representation(const VectorGraphInstance& inst) {
    const std::size_t n = inst.basis_embed.size();
    std::vector<std::vector<Rational>> m(8, std::vector<Rational>(n));
    for (std::size_t b = 0; b < n; ++b) {
        const XYVec& v = inst.basis_embed[b];
        const Rational* xcomp[4] = {&v.x.q0, &v.x.q1, &v.x.q2, &v.x.q3};
        const Rational* ycomp[4] = {&v.y.q0, &v.y.q1, &v.y.q2, &v.y.q3};
        for (std::size_t k = 0; k < 4; ++k) {
            m[k][b] = *xcomp[k];
            m[4 + k][b] = *ycomp[k];
        }
    }
    return rational_matrix_rank(m) == static_cast<int>(n);
}

struct InstanceReport {
    bool ok = true;
    std::vector<std::string> problems;

    void fail(std::string what) {
        ok = false;
        problems.push_back(std::move(what));
    }
};

// Structural validation: connection vectors embed to exact unit vectors, are
// pairwise distinct, no connection is the negation of another (so every
// vertex has degree 2 * |connections|), and the embedding is injective.
inline InstanceReport validate_instance(const VectorGraphInstance& inst) {
    InstanceReport report;
    if (inst.rank <= 0 || inst.basis_embed.size() != static_cast<std::size_t>(inst.rank)) {
        report.fail("basis size does not match rank");
        return report;
    }
    for (const LatticePoint& s : inst.connections) {
        if (s.rank() != inst.rank) {
            report.fail("connection " + to_string(s) + " has wrong rank");
            return report;
        }
        if (!is_unit(embed(inst, s))) {
            report.fail("connection " + to_string(s) + " does not embed to a unit vector");
        }
    }
    std::set<LatticePoint> seen;
    for (const LatticePoint& s : inst.connections) {
        if (!seen.insert(s).second) report.fail("duplicate connection " + to_string(s));
        if (seen.count(-s) && !(s == -s)) report.fail("connection " + to_string(s) + " is the negation of another");
    }
    if (!verify_unique_representation(inst)) {
        report.fail("generator basis is not linearly independent over the rationals");
    }
    return report;
}

/*
 * The Moser instance. With u = (1, 0), the generators are the rotations of u
 * by the angles +/-alpha and +/-beta, where alpha = arccos(1/(2*sqrt3)) - pi/6
 * and beta = alpha + pi/3. Those cosines and sines have closed forms in the
 * field, derived once by angle addition:
 *
 *     cos alpha = 1/4 + sqrt33/12      sin alpha = sqrt11/4 - sqrt3/12
 *     cos beta  = 1/4 - sqrt33/12      sin beta  = sqrt11/4 + sqrt3/12
 *
 * The connection set holds seven unit vectors: the four generators, the two
 * short rhombus diagonals, and u itself, which equals the sum of all four
 * generators. No trigonometric function is evaluated anywhere.
 */
namespace moser {

inline QReal cos_alpha() { return {Rational(1, 4), Rational(0), Rational(0), Rational(1, 12)}; }
inline QReal sin_alpha() { return {Rational(0), Rational(-1, 12), Rational(1, 4), Rational(0)}; }
inline QReal cos_beta() { return {Rational(1, 4), Rational(0), Rational(0), Rational(-1, 12)}; }
inline QReal sin_beta() { return {Rational(0), Rational(1, 12), Rational(1, 4), Rational(0)}; }

} // namespace moser

inline VectorGraphInstance moser_instance() {
    VectorGraphInstance inst;
    inst.name = "moser";
    inst.rank = 4;
    inst.basis_embed = {
        {moser::cos_alpha(), moser::sin_alpha()},   // rotation by +alpha
        {moser::cos_alpha(), -moser::sin_alpha()},  // rotation by -alpha
        {moser::cos_beta(), moser::sin_beta()},     // rotation by +beta
        {moser::cos_beta(), -moser::sin_beta()},    // rotation by -beta
    };
    inst.connections = {
        LatticePoint{1, 1, 1, 1},   // u, the sum of the four generators
        LatticePoint{1, 0, 0, 0},
        LatticePoint{0, 1, 0, 0},
        LatticePoint{0, 0, 1, 0},
        LatticePoint{0, 0, 0, 1},
        LatticePoint{1, 0, -1, 0},  // short diagonal of the upper rhombus
        LatticePoint{0, 1, 0, -1},  // short diagonal of the lower rhombus
    };
    return inst;
}

// The square lattice with axis-aligned unit steps. Used as a sanity oracle:
// bipartite, degree 4, trivially independent basis.
inline VectorGraphInstance zsquare_instance() {
    VectorGraphInstance inst;
    inst.name = "zsquare";
    inst.rank = 2;
    inst.basis_embed = {
        {QReal::one(), QReal::zero()},
        {QReal::zero(), QReal::one()},
    };
    inst.connections = {
        LatticePoint{1, 0},
        LatticePoint{0, 1},
    };
    return inst;
}

// Built-in instance lookup by name; unknown names are a validation error.
inline VectorGraphInstance instance_by_name(const std::string& name) {
    if (name == "moser") return moser_instance();
    if (name == "zsquare") return zsquare_instance();
    throw ValidationError("unknown instance '" + name + "' (expected moser or zsquare)");
}

} // namespace vgraph
