#include "burau/representation.hpp"

#include <stdexcept>

namespace burau {
namespace {

LaurentPoly q_pow(int e) { return LaurentPoly::monomial(1, e); }

void check_gen(int gen, int strands) {
    if (gen < 1 || gen >= strands) throw std::invalid_argument("generator index out of range");
}

unsigned long long magnitude(std::int64_t e) {
    return e < 0 ? 0ULL - static_cast<unsigned long long>(e) : static_cast<unsigned long long>(e);
}

}  // namespace

PolyMatrix burau_generator(int gen, bool inverse) {
    check_gen(gen, 4);
    const LaurentPoly q = q_pow(1);
    const LaurentPoly qi = q_pow(-1);
    PolyMatrix m = PolyMatrix::identity(3);
    switch (gen) {
        case 1:
            if (!inverse) {
                m(0, 0) = q;
                m(0, 1) = 1;
            } else {
                m(0, 0) = qi;
                m(0, 1) = -qi;
            }
            break;
        case 2:
            if (!inverse) {
                m(1, 0) = -q;
                m(1, 1) = q;
                m(1, 2) = 1;
            } else {
                m(1, 0) = 1;
                m(1, 1) = qi;
                m(1, 2) = -qi;
            }
            break;
        case 3:
            if (!inverse) {
                m(2, 1) = -q;
                m(2, 2) = q;
            } else {
                m(2, 1) = 1;
                m(2, 2) = qi;
            }
            break;
    }
    return m;
}

IntMatrix integral_generator(int gen, bool inverse) {
    check_gen(gen, 4);
    const int e = inverse ? -1 : 1;
    IntMatrix m = IntMatrix::identity(3);
    switch (gen) {
        case 1: m(0, 1) = e; break;
        case 2:
            m(1, 0) = -e;
            m(1, 2) = e;
            break;
        case 3: m(2, 1) = -e; break;
    }
    return m;
}

PolyMatrix burau3_generator(int gen, bool inverse) {
    check_gen(gen, 3);
    const LaurentPoly q = q_pow(1);
    const LaurentPoly qi = q_pow(-1);
    PolyMatrix m = PolyMatrix::identity(2);
    if (gen == 1) {
        m(0, 0) = inverse ? qi : q;
        m(0, 1) = inverse ? -qi : LaurentPoly(1);
    } else {
        m(1, 0) = inverse ? LaurentPoly(1) : -q;
        m(1, 1) = inverse ? qi : q;
    }
    return m;
}

PolyMatrix rho_q(const BraidWord& w) {
    if (w.strands() != 4) throw std::invalid_argument("rho_q expects a 4-strand word");
    PolyMatrix m = PolyMatrix::identity(3);
    for (const auto& l : w.letters()) m *= power(burau_generator(l.gen, l.exp < 0), magnitude(l.exp));
    return m;
}

IntMatrix rho_int(const BraidWord& w) {
    if (w.strands() != 4) throw std::invalid_argument("rho_int expects a 4-strand word");
    IntMatrix m = IntMatrix::identity(3);
    for (const auto& l : w.letters()) m *= power(integral_generator(l.gen, l.exp < 0), magnitude(l.exp));
    return m;
}

PolyMatrix rho3_q(const BraidWord& w) {
    if (w.strands() != 3) throw std::invalid_argument("rho3_q expects a 3-strand word");
    PolyMatrix m = PolyMatrix::identity(2);
    for (const auto& l : w.letters()) m *= power(burau3_generator(l.gen, l.exp < 0), magnitude(l.exp));
    return m;
}

EisensteinMatrix specialize(const PolyMatrix& m, EvalPoint z) {
    return m.map([z](const LaurentPoly& p) { return p.evaluate(z); });
}

RationalMatrix specialize(const PolyMatrix& m, const Rational& z) {
    return m.map([&z](const LaurentPoly& p) { return p.evaluate(z); });
}

void act_in_place(PolyVector& v, int gen, std::int64_t exp) {
    check_gen(gen, 4);
    auto& [r, s, t] = v;
    const unsigned long long n = magnitude(exp);
    for (unsigned long long k = 0; k < n; ++k) {
        if (exp > 0) {
            switch (gen) {
                case 1: r = r.shifted(1) + s; break;                 // (qR + S, S, T)
                case 2: s = (s - r).shifted(1) + t; break;           // (R, q(S - R) + T, T)
                case 3: t = (t - s).shifted(1); break;               // (R, S, q(T - S))
            }
        } else {
            switch (gen) {
                case 1: r = (r - s).shifted(-1); break;              // (q^-1 (R - S), S, T)
                case 2: s = (s - t).shifted(-1) + r; break;          // (R, R + q^-1 (S - T), T)
                case 3: t = t.shifted(-1) + s; break;                // (R, S, S + q^-1 T)
            }
        }
    }
}

void act_in_place(IntVector& v, int gen, const BigInt& exp) {
    check_gen(gen, 4);
    auto& [r, s, t] = v;
    switch (gen) {
        case 1: r += exp * s; break;
        case 2: s += exp * (t - r); break;
        case 3: t -= exp * s; break;
    }
}

}  // namespace burau
