#pragma once

#include "vgraph/rational.hpp"

#include <cmath>
#include <string>

namespace vgraph {

/*
 * An element of the real field generated over the rationals by sqrt3 and
 * sqrt11, stored on the basis {1, sqrt3, sqrt11, sqrt33}:
 *
 *     value = q0 + q1*sqrt3 + q2*sqrt11 + q3*sqrt33
 *
 * The basis is linearly independent over the rationals, so the representation
 * is unique and equality is component-wise. Products reduce through
 *
 *     sqrt3*sqrt3  = 3         sqrt3*sqrt11  = sqrt33
 *     sqrt11*sqrt11 = 11       sqrt3*sqrt33  = 3*sqrt11
 *     sqrt33*sqrt33 = 33       sqrt11*sqrt33 = 11*sqrt3
 *
 * All unit-distance decisions in the library go through this type; floating
 * point appears only in to_double(), which is for rendering and diagnostics.
 */
struct QReal {
    Rational q0, q1, q2, q3;

    QReal() = default;
    QReal(Rational r0, Rational r1, Rational r2, Rational r3)
        : q0(std::move(r0)), q1(std::move(r1)), q2(std::move(r2)), q3(std::move(r3)) {}
    explicit QReal(Rational r) : q0(std::move(r)) {}
    explicit QReal(long v) : q0(v) {}

    static QReal zero() { return QReal(); }
    static QReal one() { return QReal(Rational(1)); }

    bool is_zero() const { return q0 == 0 && q1 == 0 && q2 == 0 && q3 == 0; }

    QReal operator+(const QReal& o) const {
        return {q0 + o.q0, q1 + o.q1, q2 + o.q2, q3 + o.q3};
    }
    QReal operator-(const QReal& o) const {
        return {q0 - o.q0, q1 - o.q1, q2 - o.q2, q3 - o.q3};
    }
    QReal operator-() const { return {-q0, -q1, -q2, -q3}; }

    QReal operator*(const QReal& o) const {
        return {q0 * o.q0 + 3 * (q1 * o.q1) + 11 * (q2 * o.q2) + 33 * (q3 * o.q3),
                q0 * o.q1 + q1 * o.q0 + 11 * (q2 * o.q3 + q3 * o.q2),
                q0 * o.q2 + q2 * o.q0 + 3 * (q1 * o.q3 + q3 * o.q1),
                q0 * o.q3 + q3 * o.q0 + q1 * o.q2 + q2 * o.q1};
    }

    QReal operator*(long s) const {
        return {q0 * s, q1 * s, q2 * s, q3 * s};
    }

    QReal& operator+=(const QReal& o) { return *this = *this + o; }
    QReal& operator-=(const QReal& o) { return *this = *this - o; }
    QReal& operator*=(const QReal& o) { return *this = *this * o; }

    bool operator==(const QReal& o) const = default;
};

inline QReal operator*(long s, const QReal& v) { return v * s; }

inline bool is_zero(const QReal& v) { return v.is_zero(); }

inline double to_double(const QReal& v) {
    static const double s3 = std::sqrt(3.0);
    static const double s11 = std::sqrt(11.0);
    static const double s33 = std::sqrt(33.0);
    return to_double(v.q0) + to_double(v.q1) * s3 + to_double(v.q2) * s11 + to_double(v.q3) * s33;
}

// Diagnostic form, e.g. "1/4 + 1/12*sqrt33". Zero components are skipped; the
// zero value prints as "0".
inline std::string to_string(const QReal& v) {
    static const char* const radicals[4] = {"", "*sqrt3", "*sqrt11", "*sqrt33"};
    const Rational* comps[4] = {&v.q0, &v.q1, &v.q2, &v.q3};
    std::string out;
    for (int i = 0; i < 4; ++i) {
        const Rational& c = *comps[i];
        if (c == 0) continue;
        if (out.empty()) {
            out += to_string(c);
        } else if (c < 0) {
            out += " - " + to_string(Rational(-c));
        } else {
            out += " + " + to_string(c);
        }
        out += radicals[i];
    }
    return out.empty() ? "0" : out;
}

// A vector in the plane with exact coordinates.
struct XYVec {
    QReal x, y;

    XYVec() = default;
    XYVec(QReal px, QReal py) : x(std::move(px)), y(std::move(py)) {}

    XYVec operator+(const XYVec& o) const { return {x + o.x, y + o.y}; }
    XYVec operator-(const XYVec& o) const { return {x - o.x, y - o.y}; }
    XYVec operator-() const { return {-x, -y}; }
    XYVec operator*(long s) const { return {x * s, y * s}; }

    bool operator==(const XYVec& o) const = default;
};

inline QReal dot(const XYVec& v, const XYVec& w) { return v.x * w.x + v.y * w.y; }

inline QReal norm_sq(const XYVec& v) { return dot(v, v); }

inline bool is_unit(const XYVec& v) { return norm_sq(v) == QReal::one(); }

inline std::string to_string(const XYVec& v) {
    return "(" + to_string(v.x) + ", " + to_string(v.y) + ")";
}

} // namespace vgraph
