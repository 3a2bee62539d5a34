#include <doctest.h>

#include <random>
#include <set>

#include "burau/error.hpp"
#include "burau/orbits.hpp"
#include "burau/projective.hpp"
#include "burau/representation.hpp"
#include "oracle.hpp"

using namespace burau;

namespace {
BraidWord W(std::string_view text) { return parse_braid(expand_named_tokens(text), 4); }
LaurentPoly P(std::string_view s) { return parse_poly(s); }

ProjPointQ random_point(std::mt19937_64& rng, long long bound) {
    std::uniform_int_distribution<long long> d(-bound, bound);
    while (true) {
        const long long r = d(rng), s = d(rng), t = d(rng);
        if (r == 0 && s == 0 && t == 0) continue;
        ProjPointQ p(r, s, t);
        if (p == ProjPointQ(1, 0, 1)) continue;
        return p;
    }
}

// Division steps of the ordinary Euclidean algorithm on (a, b).
int euclid_steps(BigInt a, BigInt b) {
    int n = 0;
    while (b != 0) {
        BigInt r = a % b;
        a = b;
        b = r;
        ++n;
    }
    return n;
}

std::vector<StabGen> stab_gens(long long n) {
    if (n == 1) return {StabGen::sigma2, StabGen::tau1, StabGen::delta};
    if (n == 2) return {StabGen::sigma2, StabGen::tau1_delta, StabGen::mirror};
    return {StabGen::sigma2, StabGen::tau1_delta};
}
}  // namespace

TEST_SUITE("projective") {
    TEST_CASE("normalization") {
        CHECK(ProjPointQ(-2, 4, -6) == ProjPointQ(1, -2, 3));
        CHECK(ProjPointQ(0, -3, 6).to_string() == "[0:1:-2]");
        CHECK_THROWS_AS(ProjPointQ(0, 0, 0), std::domain_error);
        const ProjPointQ p(6, 10, 14);
        CHECK(ProjPointQ(p.r(), p.s(), p.t()) == p);
    }

    TEST_CASE("lambda points") {
        const ProjPointL a(P("q + 1"), P("1"), P("1"));
        const ProjPointL b(P("-q^3 - q^2"), P("-q^2"), P("-q^2"));
        CHECK(eq_lambda(a, b));
        CHECK(b.unit_normalized().vector() == a.vector());
        CHECK(!eq_lambda(a, ProjPointL(P("q"), P("1"), P("1"))));
        const ProjPointL c(P("q^2 - 1"), P("q + 1"), LaurentPoly());
        CHECK(c.canonical().vector() == PolyVector{P("q - 1"), P("1"), LaurentPoly()});
        CHECK(eq_lambda(c, c.canonical()));
        CHECK_THROWS_AS(ProjPointL(0, 0, 0), std::domain_error);
    }

    TEST_CASE("eq_lambda is an equivalence on sampled triples") {
        std::mt19937_64 rng(41);
        std::vector<ProjPointL> pts;
        for (int i = 0; i < 12; ++i) {
            const auto base = ProjPointL(oracle::random_poly(rng, 2, 2), oracle::random_poly(rng, 2, 2), 1);
            const auto scale = oracle::random_poly(rng, 2, 3);
            pts.push_back(base);
            if (!scale.is_zero()) {
                pts.push_back(ProjPointL(base.r() * scale, base.s() * scale, base.t() * scale));
            }
        }
        for (const auto& x : pts) {
            CHECK(eq_lambda(x, x));
            CHECK(eq_lambda(x, x.unit_normalized()));
            CHECK(x.unit_normalized().unit_normalized().vector() == x.unit_normalized().vector());
            for (const auto& y : pts) {
                CHECK(eq_lambda(x, y) == eq_lambda(y, x));
                if (!eq_lambda(x, y)) continue;
                for (const auto& z : pts) {
                    if (eq_lambda(y, z)) CHECK(eq_lambda(x, z));
                }
            }
        }
    }

    TEST_CASE("Eisenstein points") {
        const Eisenstein j = Eisenstein::j();
        const ProjPointE a(1, -j, 0);
        const ProjPointE b(j, -j * j, 0);
        CHECK(eq_eisenstein(a, b));
        CHECK(a.canonical().to_string() == b.canonical().to_string());
        CHECK(!eq_eisenstein(a, ProjPointE(1, j, 0)));
        CHECK(ProjPointE(2, 4, 0).canonical().to_string() == ProjPointE(1, 2, 0).canonical().to_string());
    }

    TEST_CASE("group action") {
        std::mt19937_64 rng(42);
        for (int i = 0; i < 300; ++i) {
            const auto a = oracle::random_word(rng, 8);
            const auto b = oracle::random_word(rng, 8);
            const auto p = random_point(rng, 50);
            CHECK(act(a * b, p) == act(a, act(b, p)));
            CHECK(act(BraidWord(), p) == p);
            const auto v = oracle::act(a * b, {p.r(), p.s(), p.t()});
            CHECK(act(a * b, p) == ProjPointQ(v[0], v[1], v[2]));
        }
        for (int i = 0; i < 50; ++i) {
            const auto a = oracle::random_word(rng, 5);
            const auto b = oracle::random_word(rng, 5);
            const ProjPointL x(1, P("q + 2"), P("-q"));
            CHECK(eq_lambda(act(a * b, x), act(a, act(b, x))));
        }
    }

    TEST_CASE("specialization at 1 follows the integral action") {
        std::mt19937_64 rng(43);
        for (int i = 0; i < 100; ++i) {
            const auto w = oracle::random_word(rng, 8);
            const auto p = random_point(rng, 20);
            const PolyVector v = act_vector(w, PolyVector{LaurentPoly(p.r()), LaurentPoly(p.s()), LaurentPoly(p.t())});
            const ProjPointQ at1(v[0].evaluate(Rational(1)).convert_to<BigInt>(),
                                 v[1].evaluate(Rational(1)).convert_to<BigInt>(),
                                 v[2].evaluate(Rational(1)).convert_to<BigInt>());
            CHECK(at1 == act(w, p));
        }
    }

    TEST_CASE("embedding and base point") {
        CHECK(embed(3, 2) == ProjPointQ(3, 2, 0));
        CHECK(eq_lambda(embed_q(P("q"), 1), ProjPointL(P("q"), 1, 0)));
        CHECK(base_point() == ProjPointQ(0, 1, 0));
    }
}

TEST_SUITE("orbits") {
    TEST_CASE("invariants") {
        CHECK(orbit_invariants(ProjPointQ(37, 30, 12)) == OrbitClass{5, 2, false});
        CHECK(orbit_invariants(ProjPointQ(0, 1, 0)) == OrbitClass{1, 0, false});
        CHECK(orbit_invariants(ProjPointQ(1, 2, 1)) == OrbitClass{2, 1, false});
        CHECK(orbit_invariants(ProjPointQ(3, 7, 3)) == OrbitClass{7, 3, false});
        CHECK(orbit_invariants(ProjPointQ(4, 7, 4)) == OrbitClass{7, 3, false});
        CHECK(orbit_invariants(ProjPointQ(1, 0, 1)).singleton);
        CHECK(OrbitClass{5, 2, false}.representative() == ProjPointQ(2, 5, 2));
        CHECK_THROWS_AS(orbit_invariants(ProjPointQ(1, 0, 1)).representative(), DomainError);
        CHECK(same_orbit(ProjPointQ(2, 3, 1), ProjPointQ(2, -3, 1)));
        CHECK(!same_orbit(ProjPointQ(1, 3, 1), ProjPointQ(0, 1, 0)));
    }

    TEST_CASE("conservation under random words") {
        std::mt19937_64 rng(44);
        for (int i = 0; i < 500; ++i) {
            const auto w = oracle::random_word(rng, 30);
            const auto p = random_point(rng, 1000);
            CHECK(orbit_invariants(act(w, p)) == orbit_invariants(p));
        }
    }

    TEST_CASE("worked reduction") {
        const auto t = braided_euclid(ProjPointQ(37, 30, 12));
        CHECK(t.rep == ProjPointQ(2, 5, 2));
        CHECK(rho_int(t.braid) == rho_int(W("s1^-1 s3^2 s2^-5 s1^-1")));
        CHECK(act(t.braid, t.input) == t.rep);
        CHECK(braided_euclid(ProjPointQ(2, 1, 1)).braid.inverse() == W("s1^2 s3^-1"));
        CHECK_THROWS_AS(braided_euclid(ProjPointQ(1, 0, 1)), DomainError);
    }

    TEST_CASE("mirror folding") {
        // m > n/2 without the fold
        const ProjPointQ p(3, 5, 3);
        const auto raw = braided_euclid(p, Mirror::none);
        CHECK(raw.rep == p);
        CHECK(!raw.mirrored);
        const auto folded = braided_euclid(p, Mirror::canonical);
        CHECK(folded.rep == ProjPointQ(2, 5, 2));
        CHECK(folded.mirrored);
        CHECK(act(folded.braid, p) == folded.rep);
    }

    TEST_CASE("replay, invariants and termination bound on random points") {
        std::mt19937_64 rng(45);
        for (int i = 0; i < 2000; ++i) {
            const auto p = random_point(rng, 1000000);
            const auto t = braided_euclid(p);
            const auto cls = orbit_invariants(p);
            REQUIRE(t.rep == cls.representative());
            CHECK(act(t.braid, p) == t.rep);
            ProjPointQ cur = p;
            for (const auto& st : t.steps) {
                cur = act(BraidWord::generator(st.gen, st.exp), cur);
                CHECK(cur == st.after);
            }
            CHECK(cur == t.rep);
            CHECK(t.loop_iterations <= euclid_steps(abs(p.r() - p.t()), abs(p.s())) + 1);
        }
    }

    TEST_CASE("BFS from the representatives stays in the orbit") {
        for (const ProjPointQ start : {ProjPointQ(0, 1, 0), ProjPointQ(1, 2, 1), ProjPointQ(1, 3, 1)}) {
            const auto cls = orbit_invariants(start);
            std::set<ProjPointQ> seen{start};
            std::vector<ProjPointQ> frontier{start};
            for (int len = 0; len < 5; ++len) {
                std::vector<ProjPointQ> next;
                for (const auto& p : frontier) {
                    for (int g = 1; g <= 3; ++g) {
                        for (bool inv : {false, true}) {
                            const auto v = oracle::generator_move({p.r(), p.s(), p.t()}, g, inv);
                            const ProjPointQ q(v[0], v[1], v[2]);
                            if (seen.insert(q).second) next.push_back(q);
                        }
                    }
                }
                frontier = std::move(next);
            }
            for (const auto& p : seen) CHECK(orbit_invariants(p) == cls);
        }
    }

    TEST_CASE("stabilizer decomposition") {
        const auto d = stabilizer_decompose(tau1() * delta(), orbit_invariants(ProjPointQ(1, 3, 1)));
        CHECK(d.to_string() == "(tau1 delta)");
        CHECK(d.a == 2);
        CHECK_THROWS_AS(stabilizer_decompose(W("s1"), orbit_invariants(ProjPointQ(1, 3, 1))), DomainError);
        CHECK_THROWS_AS(stabilizer_decompose(W("s1"), orbit_invariants(ProjPointQ(1, 0, 1))), DomainError);
        for (long long a = -3; a <= 3; ++a) {
            const std::vector<BigInt> want{a, 0, 1 - a, 0, 1, 0, a - 1, 0, 2 - a};
            CHECK(rho_int((tau1() * delta()).pow(a - 1)) == IntMatrix(3, want));
        }

        std::mt19937_64 rng(46);
        for (const auto& [n, m] : std::vector<std::pair<long long, long long>>{{1, 0}, {2, 1}, {5, 2}, {5, 1}}) {
            const OrbitClass cls{n, m, false};
            const auto gens = stab_gens(n);
            for (int i = 0; i < 60; ++i) {
                BraidWord w;
                std::uniform_int_distribution<int> len(1, 8), pick(0, static_cast<int>(gens.size()) - 1), e(-3, 3);
                const int L = len(rng);
                for (int k = 0; k < L; ++k) {
                    w *= stab_generator_braid(gens[static_cast<std::size_t>(pick(rng))]).pow(e(rng));
                    if (k % 2 == 1) w *= conjugate(oracle::random_word(rng, 4), tau1().pow(2));
                }
                INFO(cls.to_string(), " ", w.to_string());
                const auto dec = stabilizer_decompose(w, cls);
                CHECK(dec.residual_is_torelli);
                CHECK(rho_int(dec.braid()) == rho_int(w));
            }
        }
    }

    TEST_CASE("line membership") {
        CHECK(vertical_line_in_principal(Fraction(3, 2)));
        CHECK(vertical_line_in_principal(Fraction(1, 2)));
        CHECK(!vertical_line_in_principal(Fraction(1, 1)));
        CHECK(!vertical_line_in_principal(Fraction(5, 3)));
        CHECK(line_in_principal(Fraction(0, 1), Fraction(1, 2)));
        CHECK(!line_in_principal(Fraction(0, 1), Fraction(0, 1)));
        CHECK_THROWS_AS(Fraction(1, 0), std::invalid_argument);
    }

    TEST_CASE("dihedral images") {
        for (const auto& q : d4_images(ProjPointQ(1, 0, 1))) CHECK(q == ProjPointQ(1, 0, 1));
        CHECK(d4_images(ProjPointQ(0, 1, 1))[1] == ProjPointQ(0, -1, 1));
        CHECK(d4_images(ProjPointQ(2, 3, 1))[4] == ProjPointQ(2, -3, 1));
        std::mt19937_64 rng(47);
        for (int i = 0; i < 200; ++i) {
            auto p = random_point(rng, 30);
            if (p.t() == 0) continue;
            const auto imgs = d4_images(p);
            CHECK(imgs.size() == 8);
            for (const auto& q : imgs) CHECK(same_orbit(p, q));
        }
        CHECK_THROWS_AS(d4_images(ProjPointQ(1, 2, 0)), DomainError);
    }

    TEST_CASE("density witnesses") {
        CHECK(density_witness(0, 1, 1, 2, 1) == ProjPointQ(3, 4, 1));
        CHECK(orbit_invariants(ProjPointQ(3, 4, 1)) == OrbitClass{2, 1, false});
        for (long long k = 1; k <= 20; ++k) {
            CHECK(same_orbit(density_witness(2, 5, 1, 3, k), ProjPointQ(1, 3, 1)));
            CHECK(same_orbit(density_witness(2, 5, 2, 5, k), ProjPointQ(2, 5, 2)));
        }
        // P_k / (n0 k) tends to (m, n, m)
        const ProjPointQ far = density_witness(2, 5, 1, 3, 100000);
        const double scale = static_cast<double>(far.s()) / 5.0;
        CHECK(static_cast<double>(far.r()) / scale == doctest::Approx(2.0).epsilon(1e-4));
        CHECK(static_cast<double>(far.t()) / scale == doctest::Approx(2.0).epsilon(1e-4));
    }
}
