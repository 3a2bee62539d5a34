#include "burau/verify.hpp"

#include <exception>
#include <sstream>

#include "burau/braid.hpp"
#include "burau/laurent.hpp"
#include "burau/orbits.hpp"
#include "burau/projective.hpp"
#include "burau/quantize.hpp"
#include "burau/representation.hpp"
#include "burau/stats.hpp"

namespace burau {
namespace {

LaurentPoly P(std::string_view s) { return parse_poly(s); }

ProjPointL PL(std::string_view r, std::string_view s, std::string_view t) { return {P(r), P(s), P(t)}; }

PolyMatrix poly_matrix(std::initializer_list<std::string_view> cells) {
    std::vector<LaurentPoly> v;
    for (auto c : cells) v.push_back(P(c));
    return PolyMatrix(3, std::move(v));
}

IntMatrix int_matrix(std::initializer_list<long long> cells) {
    std::vector<BigInt> v;
    for (auto c : cells) v.emplace_back(c);
    return IntMatrix(3, std::move(v));
}

BraidWord W(std::string_view text) { return parse_braid(expand_named_tokens(text), 4); }

class Suite {
public:
    template <class F>
    void check(std::string name, F&& f) {
        try {
            const bool ok = f();
            results_.push_back({std::move(name), ok, ok ? "" : "mismatch", false});
        } catch (const std::exception& e) {
            results_.push_back({std::move(name), false, e.what(), false});
        }
    }

    void report(std::string name, bool ok, std::string detail) {
        results_.push_back({std::move(name), ok, std::move(detail), false});
    }

    void info(std::string name, std::string detail) { results_.push_back({std::move(name), true, std::move(detail), true}); }

    std::vector<CheckResult> take() { return std::move(results_); }

private:
    std::vector<CheckResult> results_;
};

void algebra_checks(Suite& s) {
    s.check("f1 factorisation", [] {
        return P("-q + 1") * P("q + 1") * P("q^2 + q + 1") == P("-q^4 - q^3 + q + 1");
    });
    s.check("f2 factorisation", [] {
        return P("q - 1") * P("q - 1") * P("q + 1") * P("q^2 + q + 1") == P("q^5 - q^3 - q^2 + 1");
    });
    s.check("f1 vanishes at j", [] { return P("-q^4 - q^3 + q + 1").evaluate(EvalPoint::j) == Eisenstein(0); });
}

void braid_checks(Suite& s) {
    s.check("parse reduction braid", [] {
        const auto w = parse_braid("s1^-1 s3^2 s2^-5 s1^-1", 4);
        const std::vector<Letter> want{{1, -1}, {3, 2}, {2, -5}, {1, -1}};
        return w.letters() == want;
    });
    // The printed matrix multiplies the factors in reverse word order, so it is
    // the image of the conjugate taken the other way round.
    s.check("conjugate s3 by tau1^2", [] {
        const PolyMatrix printed = poly_matrix({"q^6", "q^5 + q^4 - q^2 - q", "-q^5 - q^4 + q^2 + q",  //
                                                "0", "q^4 + q^3 - q", "q^6 - q^4 - q^3 + q",        //
                                                "0", "q^4 + q^3 - q - 1", "q^6 - q^4 - q^3 + q + 1"});
        return rho_q(conjugate(BraidWord::generator(3, -1), tau1().pow(2))) == printed;
    });
    s.check("delta spelling", [] { return delta().letters().size() == 6 && delta() == W("s1 s2 s3 s1 s2 s1"); });
    s.check("delta^2 = (s1 s2 s3)^4", [] { return rho_q(delta_sq()) == rho_q(W("s1 s2 s3").pow(4)); });
}

void burau_checks(Suite& s) {
    s.check("rho_q(s2)", [] { return rho_q(BraidWord::generator(2)) == poly_matrix({"1", "0", "0", "-q", "q", "1", "0", "0", "1"}); });
    s.check("rho_q(delta)", [] {
        return rho_q(delta()) == poly_matrix({"0", "0", "q", "0", "-q^2", "0", "q^3", "0", "0"});
    });
    s.check("rho_int(s2)", [] { return rho_int(BraidWord::generator(2)) == int_matrix({1, 0, 0, -1, 1, 1, 0, 0, 1}); });
    s.check("rho_int(tau1 delta)", [] { return rho_int(tau1() * delta()) == int_matrix({2, 0, -1, 0, 1, 0, 1, 0, 0}); });
    s.check("rho_q(delta^2) = q^4 I", [] {
        return rho_q(delta_sq()) == PolyMatrix::identity(3).scaled(P("q^4"));
    });
    s.check("commutation s1 s3", [] { return rho_q(W("s1 s3")) == rho_q(W("s3 s1")); });
    s.check("tau1^2 at roots of unity", [] {
        const PolyMatrix m = rho_q(tau1().pow(2));
        for (EvalPoint z : {EvalPoint::one, EvalPoint::minus_one, EvalPoint::j, EvalPoint::j_squared}) {
            if (!specialize(m, z).is_identity()) return false;
        }
        return !specialize(m, Rational(2)).is_identity();
    });
}

void projective_checks(Suite& s) {
    s.check("s2 action formula", [] { return act(BraidWord::generator(2), ProjPointQ(3, 7, 11)) == ProjPointQ(3, 15, 11); });
    s.check("[1:0:1] is fixed", [] {
        for (int g = 1; g <= 3; ++g) {
            for (int e : {-1, 1}) {
                if (act(BraidWord::generator(g, e), ProjPointQ(1, 0, 1)) != ProjPointQ(1, 0, 1)) return false;
            }
        }
        return true;
    });
    s.check("s3 on [1:3:1]", [] { return act(BraidWord::generator(3), ProjPointQ(1, 3, 1)) == ProjPointQ(1, 3, -2); });
}

void orbit_checks(Suite& s) {
    s.check("invariants of [37:30:12]", [] {
        const auto c = orbit_invariants(ProjPointQ(37, 30, 12));
        return !c.singleton && c.n == 5 && c.m == 2;
    });
    s.check("[1:0:1] singleton", [] { return orbit_invariants(ProjPointQ(1, 0, 1)).singleton; });
    s.check("[1:3:1] ~ [2:3:2]", [] { return same_orbit(ProjPointQ(1, 3, 1), ProjPointQ(2, 3, 2)); });
    s.check("[1:2:1] ~ [3:4:1]", [] { return same_orbit(ProjPointQ(1, 2, 1), ProjPointQ(3, 4, 1)); });
    s.check("reduce [37:30:12]", [] {
        const auto t = braided_euclid(ProjPointQ(37, 30, 12));
        return t.rep == ProjPointQ(2, 5, 2) && rho_int(t.braid) == rho_int(W("s1^-1 s3^2 s2^-5 s1^-1"));
    });
    s.check("[37:30:12] first pass", [] {
        return act(W("s2^-5 s1^-1"), ProjPointQ(37, 30, 12)) == ProjPointQ(7, 5, 12) &&
               act(W("s1^-1 s3^2"), ProjPointQ(7, 5, 12)) == ProjPointQ(2, 5, 2);
    });
    s.check("reduce [2:1:1]", [] { return braided_euclid(ProjPointQ(2, 1, 1)).braid.inverse() == W("s1^2 s3^-1"); });
    s.check("stabilizer (tau1 delta)", [] {
        const auto d = stabilizer_decompose(tau1() * delta(), orbit_invariants(ProjPointQ(1, 3, 1)));
        return d.a == 2 && !d.negated && d.residual_is_torelli && d.to_string() == "(tau1 delta)";
    });
    s.check("stabilizer tau1", [] {
        const auto d = stabilizer_decompose(tau1(), orbit_invariants(ProjPointQ(0, 1, 0)));
        return d.a == -1 && d.negated && d.residual_is_torelli && d.to_string() == "tau1";
    });
    s.check("closed form (tau1 delta)^(a-1)", [] {
        for (long long a = -3; a <= 3; ++a) {
            if (rho_int((tau1() * delta()).pow(a - 1)) != int_matrix({a, 0, 1 - a, 0, 1, 0, a - 1, 0, 2 - a})) return false;
        }
        return true;
    });
    s.check("vertical line x = 3/2", [] { return vertical_line_in_principal(Fraction(3, 2)); });
}

void quantize_checks(Suite& s) {
    s.check("quantize [2:1:1]", [] { return eq_lambda(quantize_algorithmic(ProjPointQ(2, 1, 1)).point, PL("q + 1", "1", "1")); });
    s.check("quantize [3:1:5]", [] {
        return eq_lambda(quantize_algorithmic(ProjPointQ(3, 1, 5)).point,
                         PL("q^6 + q^5 + q^4", "q^4", "q^4 + q^3 + q^2 + q + 1"));
    });
    s.check("quantize [3:6:4]", [] {
        const auto d = quantize_algorithmic(ProjPointQ(3, 6, 4));
        return eq_lambda(d.point, PL("q^5 + q^4 + q^3",
                                     "-q^10 - 2*q^9 - 2*q^8 - 2*q^7 - q^6 + q^5 + 3*q^4 + 4*q^3 + 3*q^2 + 2*q + 1",
                                     "q^3 + q^2 + q + 1")) &&
               fully_piecewise_unimodal(d).fully_piecewise_unimodal;
    });
    const BraidWord w7 = W("s2^2 s1 s3^-3 s2^-3 s1^3 s3^-2");
    s.check("quantize [7:18:14] with braid", [&] {
        return eq_lambda(quantize_with_braid(w7, ProjPointQ(7, 18, 14)).point,
                         PL("q^9 + 2*q^8 + 3*q^7 + 3*q^6 + q^5 - q^4 - q^3 - q^2",
                            "-q^11 - 2*q^10 - 2*q^9 + q^8 + 6*q^7 + 11*q^6 + 10*q^5 + 4*q^4 - q^3 - 4*q^2 - 3*q - 1",
                            "q^8 + 3*q^7 + 6*q^6 + 6*q^5 + 3*q^4 - 2*q^2 - 2*q - 1"));
    });
    s.check("quantize [7:18:14] twisted", [&] {
        const BraidWord w = w7 * conjugate(BraidWord::generator(3), tau1().pow(2));
        return eq_lambda(
            quantize_with_braid(w, ProjPointQ(7, 18, 14)).point,
            PL("q^15 + 2*q^14 + 3*q^13 + 3*q^12 - 3*q^10 - 3*q^9 + 3*q^7 + 3*q^6 + q^5 - q^4 - q^3 - q^2",
               "-q^17 - 2*q^16 - 2*q^15 + q^14 + 7*q^13 + 13*q^12 + 11*q^11 + q^10 - 9*q^9 - 10*q^8 - 2*q^7 + 7*q^6 + "
               "9*q^5 + 4*q^4 - q^3 - 4*q^2 - 3*q - 1",
               "q^14 + 3*q^13 + 6*q^12 + 6*q^11 + 2*q^10 - 3*q^9 - 5*q^8 - 2*q^7 + 3*q^6 + 5*q^5 + 3*q^4 - 2*q^2 - "
               "2*q - 1"));
    });
    s.check("two-piece unimodal sequence", [] {
        const auto u = piecewise_unimodal(LaurentPoly::from_coefficients({1, 2, 3, 4, 3, 1, -1, -2, -2, -2, -1}, 0));
        return u.unimodal && u.blocks.size() == 2;
    });
    s.check("[21:29:11] S not unimodal", [] {
        return !piecewise_unimodal(P("q^13 + 3*q^12 + 6*q^11 + 8*q^10 + 8*q^9 + 5*q^8 + 2*q^7 + q^6 + 2*q^5 + 2*q^4 - "
                                     "q^3 - 3*q^2 - 3*q - 2"))
                    .unimodal;
    });
    s.check("[10:67:3] algorithmic deformation", [] {
        const auto d = quantize_algorithmic(ProjPointQ(10, 67, 3));
        return eq_lambda(d.point,
                         PL("-q^15 - 2*q^14 - q^13 + q^12 + 4*q^11 + 5*q^10 + 3*q^9 + q^8",
                            "-q^15 - 3*q^14 - 4*q^13 - 3*q^12 + q^11 + 6*q^10 + 8*q^9 + 8*q^8 + 7*q^7 + 8*q^6 + 9*q^5 + "
                            "10*q^4 + 9*q^3 + 7*q^2 + 4*q + 1",
                            "q^10 + q^9 + q^8")) &&
               !fully_piecewise_unimodal(d).fully_piecewise_unimodal;
    });
    s.check("[10:67:3] alternative witness", [] {
        const auto d = quantize_with_braid(W("s2^-10 s1^-3 s3 s2^2 s1^-1"), ProjPointQ(10, 67, 3));
        return eq_lambda(d.point, PL("-q^14 - 2*q^13 - 3*q^12 - 2*q^11 - q^10 - q^9",
                                     "q^15 + q^14 - 3*q^12 - 5*q^11 - 6*q^10 - 7*q^9 - 7*q^8 - 7*q^7 - 7*q^6 - 7*q^5 - "
                                     "7*q^4 - 6*q^3 - 4*q^2 - 2*q - 1",
                                     "-q^16 - q^15 - q^14")) &&
               fully_piecewise_unimodal(d).fully_piecewise_unimodal;
    });
    s.check("[3:1:5] lower-degree witness", [] {
        const auto d = quantize_with_braid(W("s1^3 s3^-5 s2 s3 tau1^2 tau3^2 s2 s3 s2 s3"), ProjPointQ(3, 1, 5));
        const auto alg = quantize_algorithmic(ProjPointQ(3, 1, 5));
        const auto best = minimal_deformation({alg, d});
        return eq_lambda(d.point, PL("q^4 + 2*q^3 + q^2 - 1", "q^3 + q^2 - 1", "q^3 + 2*q^2 + 2*q")) && best.unique &&
               eq_lambda(best.front.front().point, d.point);
    });
    s.check("q-rational [0:1]", [] {
        const auto [r, t] = q_rational(0, 1);
        return r.is_zero() && t == P("1");
    });
    s.check("j-deformation of [1:5:3]", [] {
        return eq_eisenstein(j_deform(ProjPointQ(1, 5, 3)), ProjPointE(1, -Eisenstein::j(), 0));
    });
    s.check("norms of [1:-j:0]", [] {
        const auto n = eisenstein_norm_profile(ProjPointE(1, -Eisenstein::j(), 0).canonical());
        return n.norms == std::array<BigInt, 3>{1, 1, 0} && n.observed_pattern;
    });
    s.check("stabilizers fix [0:1:0] at q", [] {
        for (const auto& w : {BraidWord::generator(2), tau1(), delta()}) {
            if (!eq_lambda(act(w, base_point_q()), base_point_q())) return false;
        }
        return true;
    });
}

void long_checks(Suite& s, unsigned jobs) {
    s.check("census at bound 100", [&] {
        bool matched = false;
        for (const auto& e : census_sweep(100)) matched = matched || e.total == 302172;
        CensusOptions o;
        o.jobs = jobs;
        const auto res = unimodality_census(100, default_convention(), o);
        return matched && res.total == 302172 && res.failures == 1518 && res.first_failure &&
               res.first_failure->target == ProjPointQ(10, 67, 3);
    });
    s.check("density at d = 200 above 0.72", [&] {
        DensityOptions o;
        o.jobs = jobs;
        o.cross_check_stride = 1000;
        return rational_density_curve(200, o).rows.back().ratio > Rational(72, 100);
    });

    const struct {
        ProjPointQ p;
        std::uint64_t expected;
    } points[] = {{ProjPointQ(2, 1, 1), 3522}, {ProjPointQ(3, 1, 5), 2737}, {ProjPointQ(21, 29, 11), 2219}};
    for (const auto& [p, expected] : points) {
        SearchCensus c = torelli_search_census(p, TorelliParams::defaults(), jobs);
        std::ostringstream os;
        os << "raw " << c.raw << ", distinct words " << c.distinct_words << ", distinct points " << c.distinct_points
           << ", non-FPU " << c.failures << " (distinct " << c.failures_distinct << ") vs reference 16514 / "
           << expected;
        s.info("Torelli search counts " + p.to_string(), os.str());
        s.report("Torelli witnesses " + p.to_string(), c.all_witnesses_ok, c.all_witnesses_ok ? "" : "witness mismatch");
        if (p == ProjPointQ(2, 1, 1)) {
            const bool minimal = c.pareto.size() == 1 && eq_lambda(c.pareto.front().point, PL("q + 1", "1", "1"));
            s.report("[q+1:1:1] minimal in the [2:1:1] search", minimal, minimal ? "" : "Pareto front differs");
        }
    }
}

}  // namespace

std::vector<CheckResult> verify_worked_examples(const VerifyOptions& opts) {
    Suite s;
    algebra_checks(s);
    braid_checks(s);
    burau_checks(s);
    projective_checks(s);
    orbit_checks(s);
    quantize_checks(s);
    if (opts.full) long_checks(s, opts.jobs);
    return s.take();
}

}  // namespace burau
