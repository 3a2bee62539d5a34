#include "burau/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <stdexcept>

#include "burau/error.hpp"

namespace burau {
namespace {

// Dense scratch buffers are used only when the exponent span is this small.
constexpr long kDenseSpan = 64;

int checked_exp(long long e) {
    if (e > std::numeric_limits<int>::max() || e < std::numeric_limits<int>::min()) {
        throw std::overflow_error("exponent out of range");
    }
    return static_cast<int>(e);
}

}  // namespace

std::string to_string(EvalPoint z) {
    switch (z) {
        case EvalPoint::one: return "1";
        case EvalPoint::minus_one: return "-1";
        case EvalPoint::j: return "j";
        case EvalPoint::j_squared: return "j^2";
    }
    return "?";
}

LaurentPoly::LaurentPoly(long long c) {
    if (c != 0) terms_.push_back({0, BigInt(c)});
}

LaurentPoly::LaurentPoly(const BigInt& c) {
    if (c != 0) terms_.push_back({0, c});
}

LaurentPoly LaurentPoly::monomial(BigInt c, int e) {
    LaurentPoly p;
    if (c != 0) p.terms_.push_back({e, std::move(c)});
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.exp < y.exp; });
    LaurentPoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
            p.terms_.back().coef += t.coef;
            if (p.terms_.back().coef == 0) p.terms_.pop_back();
        } else if (t.coef != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

LaurentPoly LaurentPoly::from_coefficients(const std::vector<BigInt>& coeffs, int low) {
    LaurentPoly p;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] != 0) p.terms_.push_back({checked_exp(low + static_cast<long long>(i)), coeffs[i]});
    }
    return p;
}

std::optional<int> LaurentPoly::degree() const {
    if (is_zero()) return std::nullopt;
    return max_exp();
}

BigInt LaurentPoly::coefficient(int e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, int x) { return t.exp < x; });
    if (it != terms_.end() && it->exp == e) return it->coef;
    return 0;
}

std::vector<BigInt> LaurentPoly::dense_coefficients() const {
    if (is_zero()) return {};
    std::vector<BigInt> out(static_cast<std::size_t>(max_exp() - min_exp() + 1));
    for (const auto& t : terms_) out[static_cast<std::size_t>(t.exp - min_exp())] = t.coef;
    return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.exp = checked_exp(static_cast<long long>(t.exp) + k);
    return p;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.coef = -t.coef;
    return p;
}

void LaurentPoly::merge(const LaurentPoly& o, bool subtract) {
    if (o.is_zero()) return;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->exp < b->exp)) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->exp < a->exp) {
            out.push_back({b->exp, subtract ? BigInt(-b->coef) : b->coef});
            ++b;
        } else {
            BigInt c = subtract ? BigInt(a->coef - b->coef) : BigInt(a->coef + b->coef);
            if (c != 0) out.push_back({a->exp, std::move(c)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (this == &o) {
        for (auto& t : terms_) t.coef *= 2;
        return *this;
    }
    merge(o, false);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (this == &o) {
        terms_.clear();
        return *this;
    }
    merge(o, true);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const BigInt& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& t : terms_) t.coef *= c;
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
    if (x.is_zero() || y.is_zero()) return {};
    const long low = static_cast<long>(x.min_exp()) + y.min_exp();
    const long span = static_cast<long>(x.max_exp()) + y.max_exp() - low + 1;
    if (span <= kDenseSpan) {
        std::vector<BigInt> acc(static_cast<std::size_t>(span));
        for (const auto& a : x.terms_) {
            for (const auto& b : y.terms_) acc[static_cast<std::size_t>(a.exp + b.exp - low)] += a.coef * b.coef;
        }
        return LaurentPoly::from_coefficients(acc, checked_exp(low));
    }
    std::map<int, BigInt> acc;
    for (const auto& a : x.terms_) {
        for (const auto& b : y.terms_) acc[checked_exp(static_cast<long long>(a.exp) + b.exp)] += a.coef * b.coef;
    }
    LaurentPoly p;
    for (auto& [e, c] : acc) {
        if (c != 0) p.terms_.push_back({e, std::move(c)});
    }
    return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::pow(std::int64_t e) const {
    if (e < 0) throw std::domain_error("negative power of a Laurent polynomial");
    LaurentPoly result(1);
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

Eisenstein LaurentPoly::evaluate(EvalPoint z) const {
    switch (z) {
        case EvalPoint::one: {
            BigInt s = 0;
            for (const auto& t : terms_) s += t.coef;
            return Eisenstein(s);
        }
        case EvalPoint::minus_one: {
            BigInt s = 0;
            for (const auto& t : terms_) {
                if (t.exp % 2 == 0) s += t.coef;
                else s -= t.coef;
            }
            return Eisenstein(s);
        }
        case EvalPoint::j:
        case EvalPoint::j_squared: {
            // Sum coefficients by exponent class mod 3.
            BigInt c[3] = {0, 0, 0};
            for (const auto& t : terms_) c[((t.exp % 3) + 3) % 3] += t.coef;
            if (z == EvalPoint::j) return Eisenstein(c[0] - c[2], c[1] - c[2]);
            return Eisenstein(c[0] - c[1], c[2] - c[1]);
        }
    }
    return {};
}

Rational LaurentPoly::evaluate(const Rational& z) const {
    if (is_zero()) return 0;
    if (min_exp() < 0 && z == 0) throw std::domain_error("evaluation of q^-1 at 0");
    // Horner on q^min_exp * (dense polynomial).
    const auto coeffs = dense_coefficients();
    Rational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + Rational(*it);
    int e = min_exp();
    Rational zp = 1;
    const Rational base = e < 0 ? Rational(1) / z : z;
    for (int k = 0; k < (e < 0 ? -e : e); ++k) zp *= base;
    return acc * zp;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const bool neg = it->coef < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        const BigInt mag = abs(it->coef);
        if (it->exp == 0) {
            out += mag.str();
            continue;
        }
        if (mag != 1) out += mag.str() + "*";
        out += "q";
        if (it->exp != 1) out += "^" + std::to_string(it->exp);
    }
    return out;
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    LaurentPoly parse() {
        std::vector<LaurentPoly::Term> terms;
        skip_ws();
        if (pos_ == s_.size()) throw ParseError("empty polynomial", pos_);
        bool first = true;
        while (true) {
            skip_ws();
            if (pos_ == s_.size()) break;
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                throw ParseError("expected '+' or '-'", pos_);
            }
            first = false;
            terms.push_back(term(sign));
        }
        return LaurentPoly::from_terms(std::move(terms));
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    BigInt digits() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected digits", pos_);
        return BigInt(std::string(s_.substr(start, pos_ - start)));
    }

    LaurentPoly::Term term(int sign) {
        BigInt coef = 1;
        bool has_coef = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coef = digits();
            has_coef = true;
            skip_ws();
            if (peek() != '*') return {0, sign * coef};
            ++pos_;
            skip_ws();
        }
        if (peek() != 'q') throw ParseError(has_coef ? "expected 'q' after '*'" : "expected term", pos_);
        ++pos_;
        int e = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            int esign = 1;
            if (peek() == '-') {
                esign = -1;
                ++pos_;
            }
            e = esign * static_cast<int>(to_int64(digits()));
        }
        return {e, sign * coef};
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

// Dense Q[q] helpers for the gcd route. Index = exponent, no trailing zeros.
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_qpoly(const LaurentPoly& p) {
    QPoly out;
    for (const auto& c : p.dense_coefficients()) out.emplace_back(c);
    return out;
}

// a mod b, b monic-normalized on the fly.
QPoly qmod(QPoly a, const QPoly& b) {
    const Rational lead = b.back();
    while (a.size() >= b.size()) {
        const Rational f = a.back() / lead;
        const std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

}  // namespace

LaurentPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

ContentDecomposition content_and_primitive(const LaurentPoly& p) {
    if (p.is_zero()) throw std::domain_error("content of the zero polynomial");
    BigInt g = 0;
    for (const auto& t : p.terms()) g = gcd(g, t.coef);
    const int s = p.leading_coefficient() < 0 ? -1 : 1;
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(p.term_count());
    for (const auto& t : p.terms()) terms.push_back({t.exp - p.min_exp(), BigInt(s * (t.coef / g))});
    return {s, p.min_exp(), g, LaurentPoly::from_terms(std::move(terms))};
}

LaurentPoly gcd_primitive(const LaurentPoly& p, const LaurentPoly& r) {
    if (p.is_zero() && r.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    if (p.is_zero()) return content_and_primitive(r).primitive;
    if (r.is_zero()) return content_and_primitive(p).primitive;
    QPoly a = to_qpoly(content_and_primitive(p).primitive);
    QPoly b = to_qpoly(content_and_primitive(r).primitive);
    while (!b.empty()) {
        QPoly rem = qmod(std::move(a), b);
        a = std::move(b);
        b = std::move(rem);
    }
    BigInt den = 1;
    for (const auto& c : a) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(c));
    std::vector<BigInt> ints;
    ints.reserve(a.size());
    for (const auto& c : a) {
        Rational scaled = c * den;
        ints.push_back(boost::multiprecision::numerator(scaled));
    }
    return content_and_primitive(LaurentPoly::from_coefficients(ints)).primitive;
}

LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& d) {
    if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (p.is_zero()) return {};
    std::vector<BigInt> num = p.dense_coefficients();
    const std::vector<BigInt> den = d.dense_coefficients();
    if (num.size() < den.size()) throw std::domain_error("polynomial division is not exact");
    std::vector<BigInt> quot(num.size() - den.size() + 1);
    for (std::size_t k = quot.size(); k-- > 0;) {
        const BigInt& top = num[k + den.size() - 1];
        if (top % den.back() != 0) throw std::domain_error("polynomial division is not exact");
        BigInt f = top / den.back();
        for (std::size_t i = 0; i < den.size(); ++i) num[k + i] -= f * den[i];
        quot[k] = std::move(f);
    }
    for (const auto& c : num) {
        if (c != 0) throw std::domain_error("polynomial division is not exact");
    }
    return LaurentPoly::from_coefficients(quot, p.min_exp() - d.min_exp());
}

}  // namespace burau
