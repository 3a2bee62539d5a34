#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "burau/bigint.hpp"
#include "burau/eisenstein.hpp"

namespace burau {

// Points at which polynomials are specialized exactly.
enum class EvalPoint { one, minus_one, j, j_squared };

std::string to_string(EvalPoint z);

// Element of Z[q, q^-1], stored sparsely as (exponent, coefficient) terms in
// increasing exponent order. No stored coefficient is zero; zero has no terms.
class LaurentPoly {
public:
    struct Term {
        int exp;
        BigInt coef;
        friend bool operator==(const Term&, const Term&) = default;
    };

    LaurentPoly() = default;
    LaurentPoly(long long c);  // NOLINT(google-explicit-constructor)
    LaurentPoly(const BigInt& c);  // NOLINT(google-explicit-constructor)

    // c * q^e
    static LaurentPoly monomial(BigInt c, int e);
    static LaurentPoly q() { return monomial(1, 1); }
    // Terms in any order; duplicates are summed, zeros dropped.
    static LaurentPoly from_terms(std::vector<Term> terms);
    // coeffs[i] is the coefficient of q^(low + i).
    static LaurentPoly from_coefficients(const std::vector<BigInt>& coeffs, int low = 0);

    bool is_zero() const noexcept { return terms_.empty(); }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    // Precondition: nonzero.
    int min_exp() const { return terms_.front().exp; }
    int max_exp() const { return terms_.back().exp; }
    const BigInt& leading_coefficient() const { return terms_.back().coef; }

    // Highest exponent, or nullopt for zero.
    std::optional<int> degree() const;

    BigInt coefficient(int e) const;

    // Dense coefficients from min_exp to max_exp (empty for zero).
    std::vector<BigInt> dense_coefficients() const;

    // Multiplication by q^k.
    LaurentPoly shifted(int k) const;
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const BigInt& c);

    friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
    friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
    friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    // Throws std::domain_error for e < 0: general elements are not invertible.
    LaurentPoly pow(std::int64_t e) const;

    Eisenstein evaluate(EvalPoint z) const;
    // Generic exact evaluation; z must be nonzero if negative exponents occur.
    Rational evaluate(const Rational& z) const;

    // "-q^11 - 2*q^10 + 3*q + 1"; zero prints as "0".
    std::string to_string() const;

private:
    // Combined a + sign * b, used by += and -=.
    void merge(const LaurentPoly& o, bool subtract);

    std::vector<Term> terms_;
};

// Parses the text produced by LaurentPoly::to_string (whitespace-insensitive).
LaurentPoly parse_poly(std::string_view text);

struct ContentDecomposition {
    int unit_sign;        // +1 or -1
    int unit_exp;         // unit = unit_sign * q^unit_exp
    BigInt content;       // positive
    LaurentPoly primitive;  // min exponent 0, positive leading coefficient, content 1

    LaurentPoly unit() const { return LaurentPoly::monomial(unit_sign, unit_exp); }
};

// p = unit * content * primitive. Throws std::domain_error on zero.
ContentDecomposition content_and_primitive(const LaurentPoly& p);

// Primitive gcd in Z[q] (min exponent 0, positive leading coefficient).
// Throws std::domain_error when both inputs are zero.
LaurentPoly gcd_primitive(const LaurentPoly& p, const LaurentPoly& r);

// Exact quotient of p by d in Z[q, q^-1]; throws std::domain_error if d does
// not divide p.
LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& d);

}  // namespace burau
