#include <doctest.h>

#include <random>
#include <stdexcept>

#include "burau/eisenstein.hpp"
#include "burau/error.hpp"
#include "burau/laurent.hpp"
#include "burau/matrix.hpp"
#include "burau/representation.hpp"
#include "oracle.hpp"

using namespace burau;

namespace {
LaurentPoly P(std::string_view s) { return parse_poly(s); }
const EvalPoint kPoints[] = {EvalPoint::one, EvalPoint::minus_one, EvalPoint::j, EvalPoint::j_squared};
}  // namespace

TEST_SUITE("laurent") {
    TEST_CASE("text format") {
        CHECK(P("-q^11 - 2*q^10 + 3*q + 1").to_string() == "-q^11 - 2*q^10 + 3*q + 1");
        CHECK(LaurentPoly().to_string() == "0");
        CHECK(P("q^-2 - 1").min_exp() == -2);
        CHECK(P("2*q^-1").to_string() == "2*q^-1");
        CHECK(P(" q^2+  q ") == P("q^2 + q"));
        CHECK_THROWS_AS(P("q^"), ParseError);
        CHECK_THROWS_AS(P("2**q"), ParseError);
    }

    TEST_CASE("zero terms never stored") {
        const LaurentPoly p = P("q + 1") - P("q");
        CHECK(p == LaurentPoly(1));
        CHECK(p.term_count() == 1);
        CHECK((P("q") - P("q")).is_zero());
        CHECK(LaurentPoly::from_terms({{3, 2}, {3, -2}, {1, 0}}).is_zero());
    }

    TEST_CASE("known factorisations") {
        CHECK(P("-q + 1") * P("q + 1") * P("q^2 + q + 1") == P("-q^4 - q^3 + q + 1"));
        CHECK(P("q - 1") * P("q - 1") * P("q + 1") * P("q^2 + q + 1") == P("q^5 - q^3 - q^2 + 1"));
        CHECK(P("q + 1") + LaurentPoly() == P("q + 1"));
    }

    TEST_CASE("pow") {
        CHECK(P("q + 1").pow(3) == P("q^3 + 3*q^2 + 3*q + 1"));
        CHECK(P("q + 1").pow(0) == LaurentPoly(1));
        CHECK_THROWS_AS(P("q + 1").pow(-1), std::domain_error);
    }

    TEST_CASE("evaluation") {
        const LaurentPoly f1 = P("-q^4 - q^3 + q + 1");
        CHECK(f1.evaluate(EvalPoint::j) == Eisenstein(0));
        CHECK(f1.evaluate(EvalPoint::j_squared) == Eisenstein(0));
        CHECK(P("q^3").evaluate(EvalPoint::j) == Eisenstein(1));
        CHECK(f1.evaluate(Rational(2)) == -21);
        CHECK(oracle::eval(oracle::from(f1), 2) == -21);
        CHECK(P("q^-1").evaluate(EvalPoint::j) == Eisenstein::j_squared());
        CHECK(P("q^-2 + 3").evaluate(Rational(1, 2)) == 7);
        CHECK(P("q^5 - 2*q").evaluate(EvalPoint::minus_one).b() == 0);
    }

    TEST_CASE("ring axioms against the naive oracle") {
        std::mt19937_64 rng(11);
        for (int i = 0; i < 200; ++i) {
            const auto a = oracle::random_poly(rng, 20, 1000000);
            const auto b = oracle::random_poly(rng, 20, 1000000);
            const auto c = oracle::random_poly(rng, 20, 1000000);
            CHECK(a * b == oracle::to(oracle::mul(oracle::from(a), oracle::from(b))));
            CHECK(a + b == oracle::to(oracle::add(oracle::from(a), oracle::from(b))));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK(a - a == LaurentPoly());
        }
    }

    TEST_CASE("sparse products with wide exponent spans") {
        const LaurentPoly a = P("q^200 + 1");
        const LaurentPoly b = P("q^-150 - 1");
        CHECK(a * b == oracle::to(oracle::mul(oracle::from(a), oracle::from(b))));
    }

    TEST_CASE("evaluation is a ring homomorphism") {
        std::mt19937_64 rng(12);
        for (int i = 0; i < 200; ++i) {
            const auto a = oracle::random_poly(rng, 15, 1000);
            const auto b = oracle::random_poly(rng, 15, 1000);
            for (EvalPoint z : kPoints) {
                CHECK((a * b).evaluate(z) == a.evaluate(z) * b.evaluate(z));
                CHECK((a + b).evaluate(z) == a.evaluate(z) + b.evaluate(z));
            }
            CHECK(a.evaluate(Rational(3)) == oracle::eval(oracle::from(a), 3));
        }
    }

    TEST_CASE("content and primitive part") {
        auto d = content_and_primitive(P("-2*q^-1 - 2"));
        CHECK(d.unit() == P("-q^-1"));
        CHECK(d.content == 2);
        CHECK(d.primitive == P("q + 1"));

        d = content_and_primitive(P("q + 1"));
        CHECK(d.unit() == LaurentPoly(1));
        CHECK(d.content == 1);

        d = content_and_primitive(P("3*q^5"));
        CHECK(d.unit() == P("q^5"));
        CHECK(d.content == 3);
        CHECK(d.primitive == LaurentPoly(1));

        CHECK_THROWS_AS(content_and_primitive(LaurentPoly()), std::domain_error);

        std::mt19937_64 rng(13);
        for (int i = 0; i < 100; ++i) {
            auto p = oracle::random_poly(rng, 12, 50);
            if (p.is_zero()) continue;
            p *= BigInt(6);
            const auto c = content_and_primitive(p);
            CHECK(c.unit() * LaurentPoly(c.content) * c.primitive == p);
            CHECK(c.primitive.min_exp() == 0);
            CHECK(c.primitive.leading_coefficient() > 0);
        }
    }

    TEST_CASE("primitive gcd") {
        CHECK(gcd_primitive(P("q^2 - 1"), P("q^2 + 2*q + 1")) == P("q + 1"));
        CHECK(gcd_primitive(P("-2*q - 2"), LaurentPoly()) == P("q + 1"));
        const LaurentPoly f1 = P("-q^4 - q^3 + q + 1");
        const LaurentPoly g1 = P("q^6 + q^5 - q^3 - q^2");  // q^2 (q-1)(q+1)(q^2+q+1)
        const LaurentPoly expect = P("q - 1") * P("q + 1") * P("q^2 + q + 1");
        CHECK(gcd_primitive(f1, g1) == expect);
        CHECK_THROWS_AS(gcd_primitive(LaurentPoly(), LaurentPoly()), std::domain_error);

        std::mt19937_64 rng(14);
        for (int i = 0; i < 50; ++i) {
            const auto g = oracle::random_poly(rng, 4, 5, 0);
            const auto a = oracle::random_poly(rng, 4, 5, 0);
            const auto b = oracle::random_poly(rng, 4, 5, 0);
            if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
            const auto h = gcd_primitive(g * a, g * b);
            CHECK((exact_divide(g * a, h) * h) == g * a);
            CHECK((exact_divide(g * b, h) * h) == g * b);
            // g divides the gcd
            CHECK_NOTHROW(exact_divide(h, content_and_primitive(g).primitive));
        }
        CHECK_THROWS_AS(exact_divide(P("q + 2"), P("q + 1")), std::domain_error);
    }
}

TEST_SUITE("eisenstein") {
    TEST_CASE("basic identities") {
        const Eisenstein j = Eisenstein::j();
        CHECK(j * j == Eisenstein::j_squared());
        CHECK(j * j * j == Eisenstein(1));
        CHECK(j * j + j + Eisenstein(1) == Eisenstein(0));
        CHECK(Eisenstein(1, 1).norm() == 1);
        CHECK(Eisenstein(0).norm() == 0);
        CHECK(j.conj() == Eisenstein::j_squared());
        for (const auto& u : Eisenstein::units()) CHECK(u.is_unit());
    }

    TEST_CASE("norm against complex modulus") {
        for (int a = -6; a <= 6; ++a) {
            for (int b = -6; b <= 6; ++b) {
                const double m = std::norm(oracle::eisenstein_complex(a, b));
                CHECK(static_cast<double>(Eisenstein(a, b).norm()) == doctest::Approx(m));
            }
        }
    }

    TEST_CASE("norm is multiplicative") {
        std::mt19937_64 rng(21);
        std::uniform_int_distribution<long long> d(-100000, 100000);
        for (int i = 0; i < 500; ++i) {
            const Eisenstein x(d(rng), d(rng)), y(d(rng), d(rng));
            CHECK((x * y).norm() == x.norm() * y.norm());
            CHECK(x.norm() >= 0);
        }
    }

    TEST_CASE("division and gcd") {
        std::mt19937_64 rng(22);
        std::uniform_int_distribution<long long> d(-50, 50);
        for (int i = 0; i < 300; ++i) {
            const Eisenstein x(d(rng), d(rng)), y(d(rng), d(rng));
            if (y.is_zero()) continue;
            const auto [q, r] = Eisenstein::divmod(x, y);
            CHECK(q * y + r == x);
            CHECK(r.norm() < y.norm());
            const Eisenstein g(d(rng), d(rng));
            if (g.is_zero()) continue;
            const Eisenstein h = gcd(g * x, g * y);
            CHECK_NOTHROW((g * x).exact_div(h));
            CHECK_NOTHROW(h.exact_div(g));
        }
        CHECK(gcd(Eisenstein(0), Eisenstein(0)) == Eisenstein(0));
        CHECK_THROWS_AS(Eisenstein(2).exact_div(Eisenstein(3)), std::domain_error);
    }

    TEST_CASE("canonical associate") {
        const Eisenstein x(-3, 5);
        const Eisenstein u = canonical_unit_for(x);
        CHECK(u.is_unit());
        const Eisenstein c = u * x;
        CHECK(c.a() > 0);
        for (const auto& v : Eisenstein::units()) {
            const Eisenstein other = v * x;
            if (other.a() > 0) CHECK((c.a() < other.a() || (c.a() == other.a() && c.b() <= other.b())));
        }
    }
}

TEST_SUITE("matrix") {
    TEST_CASE("identity, products, determinant") {
        const PolyMatrix s1 = burau_generator(1, false);
        const PolyMatrix s3 = burau_generator(3, false);
        CHECK(PolyMatrix::identity(3) * s1 == s1);
        CHECK(s1 * s3 == s3 * s1);
        CHECK(s1.det() == P("q"));
        const IntMatrix m(3, {2, 0, -1, 0, 1, 0, 1, 0, 0});
        CHECK(m.det() == 1);
        CHECK(power(m, 3) == m * m * m);
        CHECK(m.scaled(BigInt(2)).det() == 8);
        CHECK_THROWS_AS(IntMatrix(4), std::invalid_argument);
        CHECK_THROWS_AS(IntMatrix(2) * IntMatrix(3), std::invalid_argument);
        CHECK_THROWS_AS(IntMatrix(2, {1, 2, 3}), std::invalid_argument);
    }
}
