#pragma once

#include <array>
#include <string>

#include "burau/bigint.hpp"

namespace burau {

// a + b*j in Z[j], where j is a primitive cube root of unity (j^2 = -j - 1).
class Eisenstein {
public:
    Eisenstein() = default;
    Eisenstein(long long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
    Eisenstein(BigInt a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
    Eisenstein(BigInt a, BigInt b) : a_(std::move(a)), b_(std::move(b)) {}

    static Eisenstein j() { return {0, 1}; }
    static Eisenstein j_squared() { return {-1, -1}; }

    const BigInt& a() const noexcept { return a_; }
    const BigInt& b() const noexcept { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }

    // a^2 - ab + b^2
    BigInt norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

    // Complex conjugate: j -> j^2.
    Eisenstein conj() const { return {a_ - b_, -b_}; }

    bool is_unit() const { return norm() == 1; }

    Eisenstein operator-() const { return {-a_, -b_}; }
    Eisenstein& operator+=(const Eisenstein& o);
    Eisenstein& operator-=(const Eisenstein& o);
    Eisenstein& operator*=(const Eisenstein& o);

    friend Eisenstein operator+(Eisenstein x, const Eisenstein& y) { return x += y; }
    friend Eisenstein operator-(Eisenstein x, const Eisenstein& y) { return x -= y; }
    friend Eisenstein operator*(Eisenstein x, const Eisenstein& y) { return x *= y; }
    friend bool operator==(const Eisenstein& x, const Eisenstein& y) = default;

    // Division with remainder: x = q*y + r with norm(r) < norm(y). y != 0.
    static std::pair<Eisenstein, Eisenstein> divmod(const Eisenstein& x, const Eisenstein& y);

    // Exact division; throws std::domain_error if y does not divide x.
    Eisenstein exact_div(const Eisenstein& y) const;

    // The six units 1, -1, j, -j, j^2, -j^2.
    static std::array<Eisenstein, 6> units();

    std::string to_string() const;

private:
    BigInt a_{0};
    BigInt b_{0};
};

// Greatest common divisor up to a unit; gcd(0, 0) = 0.
Eisenstein gcd(Eisenstein x, Eisenstein y);

// Associate of x chosen by: among associates with a > 0, the lexicographically
// smallest (a, b). Zero maps to zero. Returns the unit u with u*x = result.
Eisenstein canonical_unit_for(const Eisenstein& x);

}  // namespace burau
