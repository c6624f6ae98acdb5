#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "ffvc/error.hpp"

namespace ffvc {

// Exact wide integers and rationals for counts and bound values. No floating
// point ever decides a pass/fail flag.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt bpow(BigInt base, unsigned exp) {
    BigInt r = 1;
    while (exp) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

inline BigInt big_factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

// Accepts "3", "3/2" and plain decimals like "0.25" (exact: 25/100).
Rational parse_rational(const std::string& text);

std::string rational_to_string(const Rational& r);

// Lowest-terms numerator/denominator with positive denominator.
std::string rational_num_string(const Rational& r);
std::string rational_den_string(const Rational& r);

} // namespace ffvc
