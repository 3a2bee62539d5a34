#include "burau/projective.hpp"

#include <cstdlib>
#include <stdexcept>

#include "burau/error.hpp"

namespace burau {

ProjPointQ::ProjPointQ(BigInt r, BigInt s, BigInt t) : r_(std::move(r)), s_(std::move(s)), t_(std::move(t)) {
    const BigInt g = gcd(gcd(r_, s_), t_);
    if (g == 0) throw std::domain_error("the zero triple is not a projective point");
    if (g != 1) {
        r_ /= g;
        s_ /= g;
        t_ /= g;
    }
    const BigInt& lead = r_ != 0 ? r_ : (s_ != 0 ? s_ : t_);
    if (lead < 0) {
        r_ = -r_;
        s_ = -s_;
        t_ = -t_;
    }
}

std::string ProjPointQ::to_string() const { return "[" + r_.str() + ":" + s_.str() + ":" + t_.str() + "]"; }

std::strong_ordering operator<=>(const ProjPointQ& a, const ProjPointQ& b) {
    if (a.r_ != b.r_) return a.r_ < b.r_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.s_ != b.s_) return a.s_ < b.s_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.t_ != b.t_) return a.t_ < b.t_ ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

ProjPointL::ProjPointL(LaurentPoly r, LaurentPoly s, LaurentPoly t)
    : ProjPointL(PolyVector{std::move(r), std::move(s), std::move(t)}) {}

ProjPointL::ProjPointL(PolyVector v) : v_(std::move(v)) {
    if (v_[0].is_zero() && v_[1].is_zero() && v_[2].is_zero()) {
        throw std::domain_error("the zero triple is not a projective point");
    }
}

ProjPointL ProjPointL::unit_normalized() const {
    int low = 0;
    bool any = false;
    const LaurentPoly* first = nullptr;
    for (const auto& c : v_) {
        if (c.is_zero()) continue;
        if (!any || c.min_exp() < low) low = c.min_exp();
        any = true;
        if (first == nullptr) first = &c;
    }
    const bool flip = first->leading_coefficient() < 0;
    PolyVector out;
    for (std::size_t i = 0; i < 3; ++i) {
        out[i] = v_[i].shifted(-low);
        if (flip) out[i] = -out[i];
    }
    return ProjPointL(std::move(out));
}

ProjPointL ProjPointL::canonical() const {
    LaurentPoly g;
    for (const auto& c : v_) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? content_and_primitive(c).primitive : gcd_primitive(g, c);
    }
    PolyVector out;
    BigInt content = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        out[i] = exact_divide(v_[i], g);
        for (const auto& t : out[i].terms()) content = gcd(content, t.coef);
    }
    if (content != 1) {
        for (auto& c : out) {
            std::vector<LaurentPoly::Term> terms;
            for (const auto& t : c.terms()) terms.push_back({t.exp, t.coef / content});
            c = LaurentPoly::from_terms(std::move(terms));
        }
    }
    return ProjPointL(std::move(out)).unit_normalized();
}

std::string ProjPointL::to_string() const {
    return "[" + v_[0].to_string() + " : " + v_[1].to_string() + " : " + v_[2].to_string() + "]";
}

bool eq_lambda(const ProjPointL& a, const ProjPointL& b) {
    const auto& x = a.vector();
    const auto& y = b.vector();
    return x[0] * y[1] == y[0] * x[1] && x[0] * y[2] == y[0] * x[2] && x[1] * y[2] == y[1] * x[2];
}

ProjPointE::ProjPointE(Eisenstein r, Eisenstein s, Eisenstein t) : v_{std::move(r), std::move(s), std::move(t)} {
    if (v_[0].is_zero() && v_[1].is_zero() && v_[2].is_zero()) {
        throw std::domain_error("the zero triple is not a projective point");
    }
}

ProjPointE ProjPointE::canonical() const {
    const Eisenstein g = gcd(gcd(v_[0], v_[1]), v_[2]);
    std::array<Eisenstein, 3> out;
    for (std::size_t i = 0; i < 3; ++i) out[i] = v_[i].exact_div(g);
    const Eisenstein& first = !out[0].is_zero() ? out[0] : (!out[1].is_zero() ? out[1] : out[2]);
    const Eisenstein u = canonical_unit_for(first);
    return {u * out[0], u * out[1], u * out[2]};
}

std::string ProjPointE::to_string() const {
    return "[" + v_[0].to_string() + " : " + v_[1].to_string() + " : " + v_[2].to_string() + "]";
}

bool eq_eisenstein(const ProjPointE& a, const ProjPointE& b) {
    return a.r() * b.s() == b.r() * a.s() && a.r() * b.t() == b.r() * a.t() && a.s() * b.t() == b.s() * a.t();
}

long degree_cap() {
    static const long cap = [] {
        if (const char* env = std::getenv("BURAU_MAX_DEGREE")) {
            char* end = nullptr;
            const long v = std::strtol(env, &end, 10);
            if (end != env && *end == '\0' && v > 0) return v;
        }
        return 1000000L;
    }();
    return cap;
}

IntVector act_vector(const BraidWord& w, IntVector v) {
    if (w.strands() != 4) throw std::invalid_argument("the point action expects a 4-strand word");
    const auto& ls = w.letters();
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) act_in_place(v, it->gen, BigInt(it->exp));
    return v;
}

PolyVector act_vector(const BraidWord& w, PolyVector v) {
    if (w.strands() != 4) throw std::invalid_argument("the point action expects a 4-strand word");
    const long cap = degree_cap();
    const auto& ls = w.letters();
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
        act_in_place(v, it->gen, it->exp);
        for (const auto& c : v) {
            if (!c.is_zero() && (static_cast<long>(c.max_exp()) - c.min_exp() > cap || c.max_exp() > cap ||
                                 -static_cast<long>(c.min_exp()) > cap)) {
                throw DomainError("polynomial degree exceeds BURAU_MAX_DEGREE=" + std::to_string(cap));
            }
        }
    }
    return v;
}

ProjPointQ act(const BraidWord& w, const ProjPointQ& p) {
    auto v = act_vector(w, p.vector());
    return {std::move(v[0]), std::move(v[1]), std::move(v[2])};
}

ProjPointL act(const BraidWord& w, const ProjPointL& p) { return ProjPointL(act_vector(w, p.vector())); }

ProjPointQ embed(const BigInt& r, const BigInt& s) { return {r, s, 0}; }

ProjPointL embed_q(const LaurentPoly& r, const LaurentPoly& s) { return {r, s, LaurentPoly()}; }

}  // namespace burau
