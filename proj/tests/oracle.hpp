#pragma once

// Independent reference implementations used to cross-check the library.
// They favour obviousness over speed and share no code with src/.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "burau/bigint.hpp"
#include "burau/braid.hpp"
#include "burau/laurent.hpp"

namespace oracle {

using burau::BigInt;
using burau::Rational;

using Poly = std::map<int, BigInt>;  // exponent -> coefficient, zeros allowed

inline Poly from(const burau::LaurentPoly& p) {
    Poly out;
    for (const auto& t : p.terms()) out[t.exp] = t.coef;
    return out;
}

inline burau::LaurentPoly to(const Poly& p) {
    std::vector<burau::LaurentPoly::Term> terms;
    for (const auto& [e, c] : p) terms.push_back({e, c});
    return burau::LaurentPoly::from_terms(std::move(terms));
}

inline Poly mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [e1, c1] : a) {
        for (const auto& [e2, c2] : b) out[e1 + e2] += c1 * c2;
    }
    return out;
}

inline Poly add(Poly a, const Poly& b) {
    for (const auto& [e, c] : b) a[e] += c;
    return a;
}

// Direct substitution sum c * x^e over the rationals.
inline Rational eval(const Poly& p, const Rational& x) {
    Rational out = 0;
    for (const auto& [e, c] : p) {
        Rational xe = 1;
        for (int k = 0; k < (e < 0 ? -e : e); ++k) xe *= x;
        if (e < 0) xe = 1 / xe;
        out += c * xe;
    }
    return out;
}

// a + b j as a complex number, j = exp(2 pi i / 3).
inline std::complex<double> eisenstein_complex(double a, double b) {
    const std::complex<double> j(-0.5, std::sqrt(3.0) / 2);
    return a + b * j;
}

// The elementary moves on an integer triple, written out case by case.
inline std::array<BigInt, 3> generator_move(std::array<BigInt, 3> v, int gen, bool inverse) {
    auto& [r, s, t] = v;
    switch (gen) {
        case 1:
            if (inverse) r -= s; else r += s;
            break;
        case 2:
            if (inverse) s = s - t + r; else s = s + t - r;
            break;
        case 3:
            if (inverse) t += s; else t -= s;
            break;
    }
    return v;
}

inline std::array<BigInt, 3> act(const burau::BraidWord& w, std::array<BigInt, 3> v) {
    const auto& ls = w.letters();
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
        const auto n = it->exp < 0 ? -it->exp : it->exp;
        for (std::int64_t k = 0; k < n; ++k) v = generator_move(v, it->gen, it->exp < 0);
    }
    return v;
}

inline burau::BraidWord random_word(std::mt19937_64& rng, int max_len, int strands = 4, int max_exp = 3) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> gen(1, strands - 1);
    std::uniform_int_distribution<int> ex(-max_exp, max_exp);
    burau::BraidWord w(strands);
    const int n = len(rng);
    for (int i = 0; i < n; ++i) {
        int e = 0;
        while (e == 0) e = ex(rng);
        w *= burau::BraidWord::generator(gen(rng), e, strands);
    }
    return w;
}

inline burau::LaurentPoly random_poly(std::mt19937_64& rng, int max_deg, long long max_coef, int low = -5) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long long> coef(-max_coef, max_coef);
    std::uniform_int_distribution<int> lo(low, 0);
    std::vector<BigInt> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coef(rng);
    return burau::LaurentPoly::from_coefficients(c, lo(rng));
}

}  // namespace oracle
