#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace burau {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& x) { return x.str(); }

// Nonnegative gcd; gcd(0, 0) = 0.
inline BigInt gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

inline int sign(const BigInt& a) { return a.sign(); }

// Quotient rounded toward negative infinity; b != 0.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Remainder in [0, |b|).
inline BigInt floor_mod(const BigInt& a, const BigInt& b) {
    BigInt r = a % b;
    if (r < 0) r += abs(b);
    return r;
}

// Throws std::overflow_error when x does not fit.
std::int64_t to_int64(const BigInt& x);

BigInt parse_bigint(const std::string& text);

}  // namespace burau
