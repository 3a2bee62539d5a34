#include <doctest.h>

#include <filesystem>
#include <numeric>
#include <sstream>

#include "burau/orbits.hpp"
#include "burau/parallel.hpp"
#include "burau/quantize.hpp"
#include "burau/stats.hpp"

using namespace burau;
namespace fs = std::filesystem;

namespace {
// Fresh scratch directory under the system temp path.
fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("burau-test-" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

bool same_rows(const DensityCurve& a, const DensityCurve& b) {
    if (a.rows.size() != b.rows.size()) return false;
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        const auto &x = a.rows[i], &y = b.rows[i];
        if (x.d != y.d || x.members != y.members || x.total != y.total || x.ratio != y.ratio) return false;
    }
    return true;
}
}  // namespace

TEST_SUITE("density") {
    TEST_CASE("height-bounded fractions") {
        const auto f = height_bounded_fractions(3);
        std::vector<std::pair<long long, long long>> got;
        for (const auto& x : f) got.emplace_back(x.num, x.den);
        CHECK(got == std::vector<std::pair<long long, long long>>{{1, 1}, {1, 2}, {2, 1}, {1, 3}, {2, 3}, {3, 1}, {3, 2}});
        for (std::int64_t d = 1; d <= 30; ++d) {
            std::size_t count = 0;
            for (std::int64_t a = 1; a <= d; ++a) {
                for (std::int64_t b = 1; b <= d; ++b) count += std::gcd(a, b) == 1;
            }
            CHECK(height_bounded_fractions(d).size() == count);
        }
    }

    TEST_CASE("hand enumeration for d <= 2") {
        // S_1 = {1}: [1:1:1] has n = 1.
        auto r = rational_density(1);
        CHECK(r.members == 1);
        CHECK(r.total == 1);
        CHECK(r.ratio == 1);
        // S_2 = {1, 1/2, 2}: only (x, y) = (1, 2), i.e. [1:2:1], misses the principal orbit.
        r = rational_density(2);
        CHECK(r.members == 8);
        CHECK(r.total == 9);
        CHECK(r.ratio == Rational(8, 9));
        CHECK(rational_density(3).ratio == Rational(41, 49));
        CHECK_THROWS_AS(rational_density(0), std::invalid_argument);
    }

    TEST_CASE("literal and bucketed computations agree") {
        DensityOptions o;
        o.jobs = 1;
        o.cross_check_stride = 1;
        const auto curve = rational_density_curve(12, o);
        REQUIRE(curve.rows.size() == 12);
        for (const auto& row : curve.rows) {
            const auto lit = rational_density(row.d);
            CHECK(row.members == lit.members);
            CHECK(row.total == lit.total);
            CHECK(row.ratio == Rational(row.members, row.total));
        }
        CHECK(curve.cross_checked == curve.rows.back().total);
    }

    TEST_CASE("worker count does not change rows") {
        DensityOptions serial;
        serial.jobs = 1;
        DensityOptions parallel;
        parallel.jobs = 4;
        CHECK(same_rows(rational_density_curve(40, serial), rational_density_curve(40, parallel)));
    }

    TEST_CASE("checkpoints resume to identical rows") {
        const fs::path dir = scratch("density");
        DensityOptions o;
        o.jobs = 2;
        o.checkpoint_dir = dir;
        const auto first = rational_density_curve(30, o);
        CHECK(!fs::is_empty(dir));
        const auto second = rational_density_curve(30, o);
        CHECK(same_rows(first, second));
        fs::remove_all(dir);
    }

    TEST_CASE("csv") {
        std::ostringstream os;
        write_density_csv(os, rational_density_curve(2, {}));
        CHECK(os.str() == "d,members,total,ratio_num,ratio_den\n1,1,1,1,1\n2,8,9,8,9\n");
    }
}

TEST_SUITE("census") {
    TEST_CASE("conventions") {
        CHECK(default_convention().tag() == "open0-rgtt");
        CHECK(CensusConvention::all().size() == 9);
        for (const auto& c : CensusConvention::all()) CHECK(CensusConvention::parse(c.tag()) == c);
        CHECK_THROWS_AS(CensusConvention::parse("closed2"), std::invalid_argument);
    }

    TEST_CASE("totals against a direct count") {
        for (std::int64_t bound : {1, 2, 7}) {
            for (const auto& c : CensusConvention::all()) {
                const std::int64_t lo = c.range == Range::closed1 ? 1 : 0;
                const std::int64_t hi = c.range == Range::open0 ? bound - 1 : bound;
                std::uint64_t count = 0;
                for (std::int64_t r = lo; r <= hi; ++r) {
                    for (std::int64_t s = lo; s <= hi; ++s) {
                        for (std::int64_t t = lo; t <= hi; ++t) {
                            if (c.mirror == MirrorQuotient::r_ge_t && r < t) continue;
                            if (c.mirror == MirrorQuotient::r_gt_t && r <= t) continue;
                            count += std::gcd(r - t, s) == 1;
                        }
                    }
                }
                CHECK(census_total(bound, c) == count);
            }
        }
        // {0,1}^3: every triple but 000 and 101
        CHECK(census_total(1, {Range::closed0, MirrorQuotient::none}) == 6);
        const auto sweep = census_sweep(5);
        CHECK(sweep.size() == 9);
    }

    TEST_CASE("small census") {
        const auto c = CensusConvention{Range::closed0, MirrorQuotient::none};
        auto res = unimodality_census(1, c);
        CHECK(res.total == 6);
        CHECK(res.failures == 0);
        CHECK(!res.first_failure);

        CensusOptions o;
        o.keep_rows = true;
        o.jobs = 1;
        res = unimodality_census(20, c, o);
        CHECK(res.rows.size() == res.total);
        CHECK(res.failures <= res.total);
        std::uint64_t fails = 0;
        std::optional<ProjPointQ> first;
        for (const auto& row : res.rows) {
            const auto d = quantize_algorithmic(row.point);
            CHECK(d.degrees() == row.degrees);
            CHECK(fully_piecewise_unimodal(d).fully_piecewise_unimodal == row.fpu);
            if (!row.fpu) {
                ++fails;
                if (!first) first = row.point;
            }
        }
        CHECK(fails == res.failures);
        if (first) {
            REQUIRE(res.first_failure);
            CHECK(res.first_failure->target == *first);
            CHECK(eq_lambda(res.first_failure->point, quantize_algorithmic(*first).point));
        }
    }

    TEST_CASE("worker count and checkpoints do not change results") {
        const auto c = default_convention();
        CensusOptions a;
        a.jobs = 1;
        CensusOptions b;
        b.jobs = 3;
        const fs::path dir = scratch("census");
        b.checkpoint_dir = dir;
        const auto x = unimodality_census(25, c, a);
        const auto y = unimodality_census(25, c, b);
        const auto z = unimodality_census(25, c, b);  // served from the shards
        for (const auto* r : {&y, &z}) {
            CHECK(r->total == x.total);
            CHECK(r->failures == x.failures);
            CHECK(r->failures_attach == x.failures_attach);
            CHECK(r->first_failure.has_value() == x.first_failure.has_value());
            if (x.first_failure) CHECK(r->first_failure->target == x.first_failure->target);
        }
        fs::remove_all(dir);
    }

    TEST_CASE("csv") {
        CensusOptions o;
        o.keep_rows = true;
        const auto res = unimodality_census(1, {Range::closed0, MirrorQuotient::none}, o);
        std::ostringstream os;
        write_census_csv(os, res);
        const std::string s = os.str();
        CHECK(s.rfind("r,s,t,n,m,fpu,degR,degS,degT\n", 0) == 0);
        CHECK(s.find("0,1,0,1,0,1,-inf,0,-inf\n") != std::string::npos);
    }
}

TEST_SUITE("search census") {
    TEST_CASE("small parameter set") {
        TorelliParams p;
        p.taus = {tau1().pow(2), tau1().pow(2) * tau3().pow(2)};
        p.exp_lo = -1;
        p.exp_hi = 1;
        p.max_blocks = 2;
        const ProjPointQ pt(2, 1, 1);
        const auto c1 = torelli_search_census(pt, p, 1);
        const auto c2 = torelli_search_census(pt, p, 3);
        const auto all = torelli_deformations(pt, p);
        CHECK(c1.raw == all.size());
        CHECK(c1.distinct_points == torelli_deformations(pt, p, true).size());
        CHECK(c1.distinct_points <= c1.distinct_words);
        CHECK(c1.distinct_words <= c1.raw);
        CHECK(c1.all_witnesses_ok);
        std::uint64_t fails = 0;
        for (const auto& d : all) fails += !fully_piecewise_unimodal(d).fully_piecewise_unimodal;
        CHECK(c1.failures == fails);
        CHECK(c1.failures_distinct <= c1.failures);
        REQUIRE(c1.pareto.size() == 1);
        CHECK(eq_lambda(c1.pareto.front().point, ProjPointL(parse_poly("q + 1"), 1, 1)));
        CHECK(c1.raw == c2.raw);
        CHECK(c1.distinct_words == c2.distinct_words);
        CHECK(c1.distinct_points == c2.distinct_points);
        CHECK(c1.failures == c2.failures);
        CHECK(c1.failures_distinct == c2.failures_distinct);
        REQUIRE(c1.minimal_fpu);
        REQUIRE(c2.minimal_fpu);
        CHECK(eq_lambda(c1.minimal_fpu->point, c2.minimal_fpu->point));
    }
}

TEST_SUITE("parallel") {
    TEST_CASE("every shard runs once and errors propagate") {
        std::vector<int> hits(100, 0);
        parallel_for(100, 4, [&](std::size_t i) { ++hits[i]; });
        CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
        CHECK_THROWS_AS(parallel_for(10, 3, [](std::size_t i) {
                            if (i == 5) throw std::runtime_error("boom");
                        }),
                        std::runtime_error);
        CHECK(default_jobs() >= 1);
    }
}
