#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace quadbir {

/// Exact integer type used throughout; every quantity in the classification
/// is an integer and all checks are bit-exact, so no floating point appears
/// anywhere in this library.
using Int = boost::multiprecision::cpp_int;

/// Exact rational, for the few formulas that are rational-valued.
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int gcd_int(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

inline std::string to_string(const Int& x) { return x.str(); }

inline std::string to_string(const Rat& x) {
    if (boost::multiprecision::denominator(x) == 1)
        return boost::multiprecision::numerator(x).str();
    return boost::multiprecision::numerator(x).str() + "/" +
           boost::multiprecision::denominator(x).str();
}

}  // namespace quadbir
