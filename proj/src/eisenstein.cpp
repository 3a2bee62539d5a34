#include "burau/eisenstein.hpp"

#include <stdexcept>

namespace burau {
namespace {

// Nearest integer to num/den, den > 0; ties round up.
BigInt round_div(const BigInt& num, const BigInt& den) {
    return floor_div(2 * num + den, 2 * den);
}

}  // namespace

Eisenstein& Eisenstein::operator+=(const Eisenstein& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

Eisenstein& Eisenstein::operator-=(const Eisenstein& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

Eisenstein& Eisenstein::operator*=(const Eisenstein& o) {
    // (a + bj)(c + dj) = ac + (ad + bc) j + bd j^2, j^2 = -1 - j
    BigInt ac = a_ * o.a_;
    BigInt bd = b_ * o.b_;
    BigInt cross = a_ * o.b_ + b_ * o.a_;
    a_ = ac - bd;
    b_ = cross - bd;
    return *this;
}

std::pair<Eisenstein, Eisenstein> Eisenstein::divmod(const Eisenstein& x, const Eisenstein& y) {
    if (y.is_zero()) throw std::domain_error("Eisenstein division by zero");
    const BigInt n = y.norm();
    const Eisenstein num = x * y.conj();
    Eisenstein quot(round_div(num.a(), n), round_div(num.b(), n));
    Eisenstein rem = x - quot * y;
    return {std::move(quot), std::move(rem)};
}

Eisenstein Eisenstein::exact_div(const Eisenstein& y) const {
    auto [quot, rem] = divmod(*this, y);
    if (!rem.is_zero()) throw std::domain_error("Eisenstein division is not exact");
    return quot;
}

std::array<Eisenstein, 6> Eisenstein::units() {
    return {Eisenstein(1), Eisenstein(-1), j(), -j(), j_squared(), -j_squared()};
}

std::string Eisenstein::to_string() const {
    if (b_ == 0) return a_.str();
    std::string out;
    if (a_ != 0) out = a_.str() + (b_ > 0 ? "+" : "-");
    else if (b_ < 0) out = "-";
    if (abs(b_) != 1) out += abs(b_).str() + "*";
    out += "j";
    return out;
}

Eisenstein gcd(Eisenstein x, Eisenstein y) {
    while (!y.is_zero()) {
        Eisenstein r = Eisenstein::divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

Eisenstein canonical_unit_for(const Eisenstein& x) {
    if (x.is_zero()) return Eisenstein(1);
    const auto us = Eisenstein::units();
    const Eisenstein* best_unit = nullptr;
    Eisenstein best;
    for (const auto& u : us) {
        Eisenstein cand = u * x;
        if (cand.a() <= 0) continue;
        if (best_unit == nullptr || cand.a() < best.a() || (cand.a() == best.a() && cand.b() < best.b())) {
            best = cand;
            best_unit = &u;
        }
    }
    return *best_unit;
}

}  // namespace burau
