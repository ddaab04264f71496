#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pineta {

// Exact arbitrary-precision arithmetic throughout; no floating point anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// "p/q" in lowest terms, "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1)
        s += "/" + denominator(q).str();
    return s;
}

inline std::string to_string(const Integer& n) { return n.str(); }

}  // namespace pineta
