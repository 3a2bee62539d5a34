#include "burau/quantize.hpp"

#include <stdexcept>

#include "burau/error.hpp"
#include "burau/representation.hpp"

namespace burau {
namespace {

void require_principal(const ProjPointQ& p) {
    const OrbitClass c = orbit_invariants(p);
    if (c.singleton || c.n != 1) {
        throw DomainError("point " + p.to_string() + " is not in the principal orbit (" + c.to_string() + ")");
    }
}

bool block_unimodal(const std::vector<BigInt>& run, ZeroRule rule) {
    std::vector<BigInt> mags;
    mags.reserve(run.size());
    for (const auto& c : run) {
        if (c != 0 || rule == ZeroRule::attach) mags.push_back(abs(c));
    }
    std::size_t i = 0;
    while (i + 1 < mags.size() && mags[i] <= mags[i + 1]) ++i;
    while (i + 1 < mags.size() && mags[i] >= mags[i + 1]) ++i;
    return i + 1 >= mags.size();
}

bool dominates(const DegreeTriple& a, const DegreeTriple& b) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (b[i] < a[i]) return false;
    }
    return a != b;
}

Eisenstein value_at(EvalPoint z) {
    switch (z) {
        case EvalPoint::one: return 1;
        case EvalPoint::minus_one: return -1;
        case EvalPoint::j: return Eisenstein::j();
        case EvalPoint::j_squared: return Eisenstein::j_squared();
    }
    return 1;
}

Eisenstein inverse_value_at(EvalPoint z) {
    switch (z) {
        case EvalPoint::one: return 1;
        case EvalPoint::minus_one: return -1;
        case EvalPoint::j: return Eisenstein::j_squared();
        case EvalPoint::j_squared: return Eisenstein::j();
    }
    return 1;
}

}  // namespace

std::string to_string(const Degree& d) { return d ? std::to_string(*d) : "-inf"; }

DegreeTriple Deformation::degrees() const { return {point.r().degree(), point.s().degree(), point.t().degree()}; }

Deformation quantize_algorithmic(const ProjPointQ& p) {
    require_principal(p);
    BraidWord witness = braided_euclid(p).braid.inverse();
    ProjPointL point = act(witness, base_point_q()).unit_normalized();
    return {p, std::move(witness), std::move(point)};
}

Deformation quantize_with_braid(const BraidWord& w, const ProjPointQ& expected) {
    const ProjPointQ image = act(w, base_point());
    if (image != expected) {
        throw DomainError("witness sends [0:1:0] to " + image.to_string() + ", not " + expected.to_string());
    }
    ProjPointL point = act(w, base_point_q()).unit_normalized();
    return {expected, w, std::move(point)};
}

CoordinateUnimodality piecewise_unimodal(const LaurentPoly& p, ZeroRule rule) {
    CoordinateUnimodality out;
    for (auto& c : p.dense_coefficients()) {
        const int sg = c.sign();
        if (sg != 0 && (out.blocks.empty() || out.blocks.back().sign != sg)) {
            out.blocks.push_back({sg, {}, true});
        }
        // the sequence starts at a nonzero term, so a block is always open here
        out.blocks.back().run.push_back(std::move(c));
    }
    for (auto& b : out.blocks) {
        b.unimodal = block_unimodal(b.run, rule);
        out.unimodal = out.unimodal && b.unimodal;
    }
    return out;
}

UnimodalityReport fully_piecewise_unimodal(const ProjPointL& point, ZeroRule rule) {
    UnimodalityReport rep;
    for (std::size_t i = 0; i < 3; ++i) {
        rep.coords[i] = piecewise_unimodal(point.vector()[i], rule);
        rep.fully_piecewise_unimodal = rep.fully_piecewise_unimodal && rep.coords[i].unimodal;
    }
    return rep;
}

MinimalDeformation minimal_deformation(const std::vector<Deformation>& candidates) {
    if (candidates.empty()) throw std::invalid_argument("minimal_deformation of an empty set");
    std::vector<const Deformation*> distinct;
    std::vector<DegreeTriple> degs;
    for (const auto& d : candidates) {
        bool seen = false;
        for (const auto* e : distinct) {
            if (eq_lambda(e->point, d.point)) {
                seen = true;
                break;
            }
        }
        if (!seen) {
            distinct.push_back(&d);
            degs.push_back(d.degrees());
        }
    }
    MinimalDeformation out;
    for (std::size_t i = 0; i < distinct.size(); ++i) {
        bool dominated = false;
        for (std::size_t k = 0; k < distinct.size() && !dominated; ++k) dominated = k != i && dominates(degs[k], degs[i]);
        if (!dominated) out.front.push_back(*distinct[i]);
    }
    out.unique = out.front.size() == 1;
    return out;
}

std::vector<BigInt> odd_continued_fraction(const BigInt& r, const BigInt& s) {
    if (s <= 0) throw std::invalid_argument("continued fraction needs a positive denominator");
    if (gcd(r, s) != 1) throw std::invalid_argument("continued fraction needs a reduced fraction");
    std::vector<BigInt> cf;
    BigInt x = r;
    BigInt y = s;
    while (y != 0) {
        BigInt a = floor_div(x, y);
        BigInt next = x - a * y;
        x = std::move(y);
        y = std::move(next);
        cf.push_back(std::move(a));
    }
    if (cf.size() % 2 == 0) {
        cf.back() -= 1;
        cf.emplace_back(1);
    }
    return cf;
}

std::pair<LaurentPoly, LaurentPoly> q_rational(const BigInt& r, const BigInt& s) {
    const auto cf = odd_continued_fraction(r, s);
    BraidWord w(3);
    for (std::size_t i = 0; i < cf.size(); ++i) {
        const std::int64_t a = to_int64(cf[i]);
        w *= BraidWord::generator(i % 2 == 0 ? 1 : 2, i % 2 == 0 ? a : -a, 3);
    }
    const PolyMatrix m = rho3_q(w);
    const ProjPointL col = ProjPointL(m(0, 1), m(1, 1), LaurentPoly()).unit_normalized();
    return {col.r(), col.s()};
}

bool check_embedding_theorem(const BigInt& r, const BigInt& s) {
    const auto [qr, qs] = q_rational(r, s);
    const Deformation d = quantize_algorithmic(embed(r, s));
    return eq_lambda(d.point, embed_q(qr, qs));
}

std::array<Eisenstein, 3> act_vector_at(const BraidWord& w, std::array<Eisenstein, 3> v, EvalPoint z) {
    if (w.strands() != 4) throw std::invalid_argument("the point action expects a 4-strand word");
    const Eisenstein q = value_at(z);
    const Eisenstein qi = inverse_value_at(z);
    auto& [r, s, t] = v;
    const auto& ls = w.letters();
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
        const std::int64_t n = it->exp < 0 ? -it->exp : it->exp;
        for (std::int64_t k = 0; k < n; ++k) {
            if (it->exp > 0) {
                switch (it->gen) {
                    case 1: r = q * r + s; break;
                    case 2: s = q * (s - r) + t; break;
                    case 3: t = q * (t - s); break;
                }
            } else {
                switch (it->gen) {
                    case 1: r = qi * (r - s); break;
                    case 2: s = qi * (s - t) + r; break;
                    case 3: t = qi * t + s; break;
                }
            }
        }
    }
    return v;
}

ProjPointE j_deform(const ProjPointQ& p) {
    require_principal(p);
    return j_deform(p, braided_euclid(p).braid.inverse());
}

ProjPointE j_deform(const ProjPointQ& p, const BraidWord& witness) {
    require_principal(p);
    const ProjPointQ image = act(witness, base_point());
    if (image != p) throw DomainError("witness sends [0:1:0] to " + image.to_string() + ", not " + p.to_string());
    auto v = act_vector_at(witness, {Eisenstein(0), Eisenstein(1), Eisenstein(0)}, EvalPoint::j);
    return ProjPointE(v[0], v[1], v[2]).canonical();
}

NormProfile eisenstein_norm_profile(const ProjPointE& e) {
    NormProfile out{{e.r().norm(), e.s().norm(), e.t().norm()}, false};
    const auto& n = out.norms;
    out.observed_pattern = n[0] <= 1 && n[2] <= 1 && (n[1] == 0 || n[1] == 1 || n[1] == 3);
    return out;
}

TorelliParams TorelliParams::defaults() {
    TorelliParams p;
    p.taus = {tau1().pow(2), tau1().pow(2) * tau3().pow(2)};
    return p;
}

TorelliEnumerator::TorelliEnumerator(const ProjPointQ& p, TorelliParams params)
    : target_(p), params_(std::move(params)), base_(4) {
    require_principal(p);
    base_ = braided_euclid(p).braid.inverse();
    width_ = params_.exp_hi > params_.exp_lo ? static_cast<std::uint64_t>(params_.exp_hi - params_.exp_lo) : 0;
    if (width_ == 0 || params_.max_blocks <= 0 || params_.taus.empty()) {
        size_ = 1;
        return;
    }
    std::uint64_t per_block = width_ * width_ * width_;
    std::uint64_t gammas = 1;
    for (int n = 1; n <= params_.max_blocks; ++n) {
        gammas *= per_block;
        offsets_.push_back(size_);
        size_ += gammas * params_.taus.size();
    }
}

BraidWord TorelliEnumerator::twist(std::uint64_t index) const {
    if (index >= size_) throw std::out_of_range("Torelli search index out of range");
    if (offsets_.empty()) return BraidWord(4);
    std::size_t blocks = offsets_.size();
    while (offsets_[blocks - 1] > index) --blocks;
    std::uint64_t local = index - offsets_[blocks - 1];
    const std::size_t tau_index = local % params_.taus.size();
    std::uint64_t g = local / params_.taus.size();
    std::vector<std::int64_t> digits(3 * blocks);
    for (std::size_t k = digits.size(); k-- > 0;) {
        digits[k] = params_.exp_lo + static_cast<std::int64_t>(g % width_);
        g /= width_;
    }
    BraidWord gamma(4);
    for (std::size_t b = 0; b < blocks; ++b) gamma *= sigma_block(digits[3 * b], digits[3 * b + 1], digits[3 * b + 2]);
    return conjugate(gamma, params_.taus[tau_index]);
}

Deformation TorelliEnumerator::deformation(std::uint64_t index) const {
    BraidWord w = witness(index);
    if (act(w, base_point()) != target_) throw std::logic_error("Torelli twist changed the integral image");
    ProjPointL point = act(w, base_point_q()).unit_normalized();
    return {target_, std::move(w), std::move(point)};
}

std::vector<Deformation> torelli_deformations(const ProjPointQ& p, const TorelliParams& params, bool dedupe_points) {
    const TorelliEnumerator e(p, params);
    std::vector<Deformation> out;
    for (std::uint64_t i = 0; i < e.size(); ++i) {
        Deformation d = e.deformation(i);
        if (dedupe_points) {
            bool seen = false;
            for (const auto& x : out) {
                if (eq_lambda(x.point, d.point)) {
                    seen = true;
                    break;
                }
            }
            if (seen) continue;
        }
        out.push_back(std::move(d));
    }
    return out;
}

}  // namespace burau
