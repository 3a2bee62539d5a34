#include "burau/orbits.hpp"

#include <stdexcept>

#include "burau/error.hpp"
#include "burau/representation.hpp"

namespace burau {

ProjPointQ OrbitClass::representative() const {
    if (singleton) throw DomainError("singleton orbit has no [m:n:m] representative");
    return {m, n, m};
}

std::string OrbitClass::to_string() const {
    if (singleton) return "singleton";
    return "n=" + n.str() + " m=" + m.str();
}

OrbitClass orbit_invariants(const ProjPointQ& p) {
    OrbitClass c;
    c.n = gcd(p.r() - p.t(), p.s());
    if (c.n == 0) {
        c.singleton = true;
        return c;
    }
    if (c.n == 1) {
        c.m = 0;
        return c;
    }
    const BigInt res = floor_mod(p.r(), c.n);
    c.m = res < c.n - res ? res : BigInt(c.n - res);
    return c;
}

bool same_orbit(const ProjPointQ& a, const ProjPointQ& b) { return orbit_invariants(a) == orbit_invariants(b); }

ReductionTrace braided_euclid(const ProjPointQ& p, Mirror mirror) {
    if (orbit_invariants(p).singleton) throw DomainError("singleton orbit: [1:0:1] is fixed by every braid");

    IntVector v = p.vector();
    std::vector<Letter> applied;
    std::vector<ReductionStep> steps;

    const auto negate_if_needed = [&v] {
        if (v[1] < 0) {
            for (auto& x : v) x = -x;
        }
    };
    const auto apply = [&](int gen, const BigInt& e) {
        if (e == 0) return;
        act_in_place(v, gen, e);
        const std::int64_t e64 = to_int64(e);
        applied.push_back({gen, e64});
        steps.push_back({gen, e64, ProjPointQ(v[0], v[1], v[2])});
    };
    auto& [r, s, t] = v;

    negate_if_needed();
    if (s == 0) {
        apply(2, 1);
        negate_if_needed();
    }
    apply(1, -floor_div(r, s));
    apply(3, floor_div(t, s));

    int iterations = 0;
    while (r != t) {
        // Upper division: s = (r - t) b + s' with 0 < s' <= |r - t|.
        const BigInt d = r - t;
        const BigInt ad = abs(d);
        BigInt sp = floor_mod(s, ad);
        if (sp == 0) sp = ad;
        apply(2, (s - sp) / d);
        apply(1, -floor_div(r, s));
        apply(3, floor_div(t, s));
        ++iterations;
    }

    bool mirrored = false;
    if (mirror == Mirror::canonical && 2 * r > s) {
        // s1 s2^2 s3 exchanges [m:n:m] and [n-m:n:n-m].
        apply(3, 1);
        apply(2, 2);
        apply(1, 1);
        mirrored = true;
    }

    BraidWord braid(4);
    for (auto it = applied.rbegin(); it != applied.rend(); ++it) braid *= BraidWord::generator(it->gen, it->exp);

    return ReductionTrace{p, std::move(steps), std::move(braid), ProjPointQ(v[0], v[1], v[2]), iterations, mirrored};
}

std::string to_string(StabGen g) {
    switch (g) {
        case StabGen::sigma2: return "s2";
        case StabGen::tau1_delta: return "(tau1 delta)";
        case StabGen::mirror: return "(s1 s2^2 s3)";
        case StabGen::tau1: return "tau1";
        case StabGen::delta: return "delta";
    }
    return "?";
}

BraidWord stab_generator_braid(StabGen g) {
    switch (g) {
        case StabGen::sigma2: return BraidWord::generator(2);
        case StabGen::tau1_delta: return tau1() * delta();
        case StabGen::mirror: return BraidWord(4, {{1, 1}, {2, 2}, {3, 1}});
        case StabGen::tau1: return tau1();
        case StabGen::delta: return delta();
    }
    return BraidWord(4);
}

BraidWord StabilizerDecomposition::braid() const {
    BraidWord w(4);
    for (const auto& f : word) w *= stab_generator_braid(f.gen).pow(f.exp);
    return w;
}

std::string StabilizerDecomposition::to_string() const {
    std::string out;
    for (const auto& f : word) {
        if (!out.empty()) out += ' ';
        out += burau::to_string(f.gen);
        if (f.exp != 1) out += "^" + std::to_string(f.exp);
    }
    return out;
}

namespace {

void push_factor(std::vector<StabFactor>& word, StabGen g, std::int64_t e) {
    if (e == 0) return;
    if (!word.empty() && word.back().gen == g) {
        word.back().exp += e;
        if (word.back().exp == 0) word.pop_back();
        return;
    }
    word.push_back({g, e});
}

// (tau1 Delta)^k, spelled with separate tau1 and Delta factors when required.
void push_tau1_delta(std::vector<StabFactor>& word, std::int64_t k, bool split) {
    if (!split) {
        push_factor(word, StabGen::tau1_delta, k);
        return;
    }
    for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) {
        if (k > 0) {
            push_factor(word, StabGen::tau1, 1);
            push_factor(word, StabGen::delta, 1);
        } else {
            push_factor(word, StabGen::delta, -1);
            push_factor(word, StabGen::tau1, -1);
        }
    }
}

}  // namespace

StabilizerDecomposition stabilizer_decompose(const BraidWord& w, const OrbitClass& cls) {
    if (cls.singleton) throw DomainError("the singleton orbit has the whole group as stabilizer");
    const IntMatrix mat = rho_int(w);
    const IntVector rep{cls.m, cls.n, cls.m};
    const auto image = mat.apply({rep[0], rep[1], rep[2]});

    StabilizerDecomposition out;
    if (image[0] == rep[0] && image[1] == rep[1] && image[2] == rep[2]) {
        out.negated = false;
    } else if (image[0] == -rep[0] && image[1] == -rep[1] && image[2] == -rep[2]) {
        out.negated = true;
    } else {
        throw DomainError("braid does not stabilize " + cls.representative().to_string());
    }

    out.x = to_int64(mat(1, 0));
    out.a = to_int64(mat(0, 0));
    const bool split = cls.n == 1;
    const std::int64_t a = out.a;
    if (!out.negated) {
        // rho(w) = rho(s2^-x) rho((tau1 Delta)^(a-1))
        push_factor(out.word, StabGen::sigma2, -out.x);
        push_tau1_delta(out.word, a - 1, split);
    } else if (cls.n >= 3) {
        throw std::logic_error("stabilizer with eigenvalue -1 on [m:n:m] for n >= 3");
    } else if (cls.n == 2) {
        // s1 s2^2 s3 negates [1:2:1], so rho(w) rho(s1 s2^2 s3)^-1 fixes it
        const IntMatrix fixed = mat * rho_int(stab_generator_braid(StabGen::mirror).inverse());
        push_factor(out.word, StabGen::sigma2, -to_int64(fixed(1, 0)));
        push_tau1_delta(out.word, to_int64(fixed(0, 0)) - 1, split);
        push_factor(out.word, StabGen::mirror, 1);
    } else {
        // rho(w) = rho(s2^x) rho(tau1 (tau1 Delta)^(a+1))
        push_factor(out.word, StabGen::sigma2, out.x);
        push_factor(out.word, StabGen::tau1, 1);
        push_tau1_delta(out.word, a + 1, split);
    }
    out.residual_is_torelli = rho_int(w * out.braid().inverse()).is_identity();
    return out;
}

Fraction::Fraction(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    const BigInt g = gcd(num, den);
    num /= g;
    den /= g;
    if (den < 0) {
        num = -num;
        den = -den;
    }
}

bool line_in_principal(const Fraction& slope, const Fraction& intercept) {
    const BigInt g = gcd(slope.den, intercept.den);
    const BigInt s1 = slope.den / g;
    const BigInt d1 = intercept.den / g;
    const BigInt v = intercept.num * s1 + slope.num * d1;
    return v == 1 || v == -1;
}

bool vertical_line_in_principal(const Fraction& abscissa) {
    const BigInt v = abscissa.num - abscissa.den;
    return v == 1 || v == -1;
}

std::vector<ProjPointQ> d4_images(const ProjPointQ& p) {
    if (p.t() == 0) throw DomainError("the dihedral symmetry acts on the affine chart t != 0");
    const auto rotate = [](const IntVector& v) -> IntVector {
        // [x:y:1] -> [1-y : x-1 : 1] in homogeneous form
        return {v[2] - v[1], v[0] - v[2], v[2]};
    };
    const auto reflect = [](const IntVector& v) -> IntVector { return {v[0], -v[1], v[2]}; };
    std::vector<ProjPointQ> out;
    out.reserve(8);
    for (IntVector start : {p.vector(), reflect(p.vector())}) {
        IntVector v = start;
        for (int k = 0; k < 4; ++k) {
            out.emplace_back(v[0], v[1], v[2]);
            v = rotate(v);
        }
    }
    return out;
}

ProjPointQ density_witness(const BigInt& m, const BigInt& n, const BigInt& m0, const BigInt& n0, const BigInt& k) {
    if (gcd(m, n) != 1 || gcd(m0, n0) != 1) throw std::invalid_argument("density_witness expects coprime pairs");
    if (k <= 0) throw std::invalid_argument("density_witness expects k >= 1");
    return {n0 * (k * m + 1) + m0, n0 * (k * n + 1), n0 * k * m + m0};
}

}  // namespace burau
