#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace boolattice {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt big_factorial(long n) {
    BigInt r = 1;
    for (long i = 2; i <= n; ++i)
        r *= i;
    return r;
}

inline BigInt big_pow(const BigInt& base, long exp) {
    BigInt r = 1, b = base;
    for (long e = exp; e > 0; e >>= 1) {
        if (e & 1)
            r *= b;
        b *= b;
    }
    return r;
}

/// Exact quotient; throws if the division leaves a remainder.
BigInt exact_div(const BigInt& a, const BigInt& b);

inline std::string to_decimal(const BigInt& v) { return v.str(); }
BigInt parse_decimal(const std::string& s);

} // namespace boolattice
