#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace vgraph {

// Arbitrary-precision rationals. cpp_rational keeps values reduced with a
// positive denominator, so equality is plain component comparison.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rational_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rational_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

inline std::string to_string(const Rational& r) {
    const BigInt num = rational_num(r);
    const BigInt den = rational_den(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

} // namespace vgraph
