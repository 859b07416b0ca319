#pragma once

#include "vgraph/errors.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace vgraph {

// A vertex in generator coordinates: an integer tuple whose length is the
// rank of the owning instance. Component-wise addition is the group law.
class LatticePoint {
public:
    LatticePoint() = default;
    explicit LatticePoint(std::vector<int> coords) : c_(std::move(coords)) {}
    LatticePoint(std::initializer_list<int> coords) : c_(coords) {}

    static LatticePoint zero(int rank) { return LatticePoint(std::vector<int>(rank, 0)); }

    int rank() const { return static_cast<int>(c_.size()); }
    int operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& coords() const { return c_; }

    LatticePoint operator+(const LatticePoint& o) const {
        require_same_rank(o);
        std::vector<int> out(c_);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += o.c_[i];
        return LatticePoint(std::move(out));
    }

    LatticePoint operator-(const LatticePoint& o) const {
        require_same_rank(o);
        std::vector<int> out(c_);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] -= o.c_[i];
        return LatticePoint(std::move(out));
    }

    LatticePoint operator-() const {
        std::vector<int> out(c_);
        for (int& v : out) v = -v;
        return LatticePoint(std::move(out));
    }

    bool operator==(const LatticePoint& o) const = default;
    // Lexicographic on coordinates; this is the vertex order everywhere.
    auto operator<=>(const LatticePoint& o) const = default;

private:
    void require_same_rank(const LatticePoint& o) const {
        if (c_.size() != o.c_.size()) {
            throw DimensionError("lattice point rank mismatch: " + std::to_string(c_.size()) +
                                 " vs " + std::to_string(o.c_.size()));
        }
    }

    std::vector<int> c_;
};

struct LatticePointHash {
    std::size_t operator()(const LatticePoint& p) const {
        std::uint64_t h = 1469598103934665603ull;
        for (int v : p.coords()) {
            h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

inline std::string to_string(const LatticePoint& p) {
    std::string out = "(";
    for (int i = 0; i < p.rank(); ++i) {
        if (i) out += ",";
        out += std::to_string(p[i]);
    }
    return out + ")";
}

} // namespace vgraph
