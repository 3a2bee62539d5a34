#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "burau/bigint.hpp"
#include "burau/orbits.hpp"
#include "burau/quantize.hpp"

namespace burau {

// ---- rational density of the principal orbit ----

struct SmallFraction {
    std::int64_t num;
    std::int64_t den;
    std::int64_t height() const { return num > den ? num : den; }
};

// Irreducible fractions a/b with 1 <= a, b <= d, ordered by (max(a, b), a, b).
std::vector<SmallFraction> height_bounded_fractions(std::int64_t d);

struct DensityRow {
    std::int64_t d;
    std::uint64_t members;
    std::uint64_t total;
    Rational ratio;
};

struct DensityCurve {
    std::vector<DensityRow> rows;
    std::uint64_t cross_checked = 0;  // pairs also reduced with braided_euclid
};

// Literal enumeration of S_d x S_d through homogeneous triples.
DensityRow rational_density(std::int64_t d);

struct DensityOptions {
    unsigned jobs = 0;                // 0 = hardware concurrency
    std::uint64_t cross_check_stride = 100;  // every k-th pair is re-reduced; 0 disables
    std::optional<std::filesystem::path> checkpoint_dir;
};

// Rows for d = 1..dmax in one pass, bucketing each pair by its larger height.
DensityCurve rational_density_curve(std::int64_t dmax, const DensityOptions& opts = {});

void write_density_csv(std::ostream& os, const DensityCurve& curve);

// ---- bounded-triple unimodality census ----

enum class Range { closed0, closed1, open0 };  // [0,B], [1,B], [0,B)
enum class MirrorQuotient { none, r_ge_t, r_gt_t };  // r <-> t identification

struct CensusConvention {
    Range range = Range::open0;
    MirrorQuotient mirror = MirrorQuotient::r_gt_t;

    std::string tag() const;
    static CensusConvention parse(const std::string& tag);
    static std::vector<CensusConvention> all();

    friend bool operator==(const CensusConvention&, const CensusConvention&) = default;
};

// Number of principal-orbit triples scanned by a convention; no quantization.
std::uint64_t census_total(std::int64_t bound, const CensusConvention& c);

struct SweepEntry {
    CensusConvention convention;
    std::uint64_t total;
};

// Totals for every shipped convention, in CensusConvention::all() order.
std::vector<SweepEntry> census_sweep(std::int64_t bound);

// The convention whose bound-100 total is the reference 302172; the same tag
// is used for every bound.
CensusConvention default_convention();

struct CensusRow {
    ProjPointQ point;
    bool fpu;
    DegreeTriple degrees;
};

struct CensusResult {
    CensusConvention convention;
    std::int64_t bound = 0;
    std::uint64_t total = 0;
    std::uint64_t failures = 0;
    std::uint64_t failures_attach = 0;  // same scan under ZeroRule::attach
    std::optional<Deformation> first_failure;
    std::vector<CensusRow> rows;  // filled only when requested
};

struct CensusOptions {
    unsigned jobs = 0;
    bool keep_rows = false;
    std::optional<std::filesystem::path> checkpoint_dir;
};

CensusResult unimodality_census(std::int64_t bound, const CensusConvention& c, const CensusOptions& opts = {});

void write_census_csv(std::ostream& os, const CensusResult& result);

// ---- Torelli search census ----

struct SearchCensus {
    ProjPointQ point;
    std::uint64_t raw = 0;              // (tau, gamma) pairs enumerated
    std::uint64_t distinct_words = 0;   // distinct freely reduced twist words
    std::uint64_t distinct_points = 0;  // distinct deformations
    std::uint64_t failures = 0;         // non fully piecewise unimodal, raw
    std::uint64_t failures_distinct = 0;
    bool all_witnesses_ok = true;
    std::vector<Deformation> pareto;      // degree-minimal front of all members
    std::vector<Deformation> fpu_pareto;  // same, restricted to FPU members
    std::optional<Deformation> minimal_fpu;  // smallest total degree among fpu_pareto
};

SearchCensus torelli_search_census(const ProjPointQ& p, const TorelliParams& params, unsigned jobs = 0);

// Code revision folded into checkpoint names so stale shards are never reused.
inline constexpr const char* kCheckpointVersion = "v1";

}  // namespace burau
