#pragma once

#include <array>
#include <compare>
#include <string>

#include "burau/bigint.hpp"
#include "burau/braid.hpp"
#include "burau/eisenstein.hpp"
#include "burau/laurent.hpp"
#include "burau/representation.hpp"

namespace burau {

// Point of P^2(Q) as a coprime integer triple whose first nonzero coordinate
// is positive.
class ProjPointQ {
public:
    // Divides by the gcd and fixes the sign. Throws std::domain_error on (0,0,0).
    ProjPointQ(BigInt r, BigInt s, BigInt t);

    const BigInt& r() const noexcept { return r_; }
    const BigInt& s() const noexcept { return s_; }
    const BigInt& t() const noexcept { return t_; }
    IntVector vector() const { return {r_, s_, t_}; }

    std::string to_string() const;  // "[r:s:t]"

    friend bool operator==(const ProjPointQ&, const ProjPointQ&) = default;
    friend std::strong_ordering operator<=>(const ProjPointQ& a, const ProjPointQ& b);

private:
    BigInt r_, s_, t_;
};

inline ProjPointQ normalize_q(BigInt r, BigInt s, BigInt t) { return {std::move(r), std::move(s), std::move(t)}; }

// Point of P^2(Z(q)) stored as an unreduced Laurent triple. Equality is
// cross-product equality (eq_lambda); no gcd reduction is performed unless
// canonical() is requested.
class ProjPointL {
public:
    // Throws std::domain_error if all three coordinates are zero.
    ProjPointL(LaurentPoly r, LaurentPoly s, LaurentPoly t);
    explicit ProjPointL(PolyVector v);

    const LaurentPoly& r() const noexcept { return v_[0]; }
    const LaurentPoly& s() const noexcept { return v_[1]; }
    const LaurentPoly& t() const noexcept { return v_[2]; }
    const PolyVector& vector() const noexcept { return v_; }

    // Multiplied by the unit +-q^k making every coordinate a polynomial with
    // overall minimum exponent 0 and the first nonzero coordinate's leading
    // coefficient positive.
    ProjPointL unit_normalized() const;
    // unit_normalized() after removing the common primitive gcd and integer
    // content of the three coordinates.
    ProjPointL canonical() const;

    std::string to_string() const;

private:
    PolyVector v_;
};

bool eq_lambda(const ProjPointL& a, const ProjPointL& b);

// Point of P^2(Q(j)) with Z[j] coordinates.
class ProjPointE {
public:
    ProjPointE(Eisenstein r, Eisenstein s, Eisenstein t);

    const Eisenstein& r() const noexcept { return v_[0]; }
    const Eisenstein& s() const noexcept { return v_[1]; }
    const Eisenstein& t() const noexcept { return v_[2]; }

    // Divided by a gcd in Z[j], then multiplied by the unit making the first
    // nonzero coordinate canonical (see canonical_unit_for).
    ProjPointE canonical() const;

    std::string to_string() const;

private:
    std::array<Eisenstein, 3> v_;
};

bool eq_eisenstein(const ProjPointE& a, const ProjPointE& b);

// Integral and q-deformed actions of a 4-strand braid (rightmost letter first).
ProjPointQ act(const BraidWord& w, const ProjPointQ& p);
ProjPointL act(const BraidWord& w, const ProjPointL& p);

// Raw vector actions (no normalization). The polynomial version enforces the
// degree cap below.
IntVector act_vector(const BraidWord& w, IntVector v);
PolyVector act_vector(const BraidWord& w, PolyVector v);

// Safety cap on the exponent span of intermediate polynomials, read once from
// BURAU_MAX_DEGREE (default 1000000). Exceeding it raises DomainError.
long degree_cap();

// [r:s] -> [r:s:0]
ProjPointQ embed(const BigInt& r, const BigInt& s);
ProjPointL embed_q(const LaurentPoly& r, const LaurentPoly& s);

// The base point [0:1:0] of the principal orbit.
inline ProjPointQ base_point() { return {0, 1, 0}; }
inline ProjPointL base_point_q() { return {0, 1, 0}; }

}  // namespace burau
