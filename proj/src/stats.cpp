#include "burau/stats.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "burau/error.hpp"
#include "burau/parallel.hpp"

namespace burau {
namespace fs = std::filesystem;

// ---------------------------------------------------------------- density

std::vector<SmallFraction> height_bounded_fractions(std::int64_t d) {
    std::vector<SmallFraction> out;
    for (std::int64_t h = 1; h <= d; ++h) {
        // height h: a = h with b < h, or b = h with a <= h; sorted by (a, b)
        const std::size_t start = out.size();
        for (std::int64_t b = 1; b < h; ++b) {
            if (std::gcd(h, b) == 1) out.push_back({h, b});
        }
        for (std::int64_t a = 1; a <= h; ++a) {
            if (std::gcd(a, h) == 1) out.push_back({a, h});
        }
        std::sort(out.begin() + static_cast<std::ptrdiff_t>(start), out.end(),
                  [](const SmallFraction& x, const SmallFraction& y) {
                      return x.num != y.num ? x.num < y.num : x.den < y.den;
                  });
    }
    return out;
}

namespace {

IntVector homogeneous(const SmallFraction& x, const SmallFraction& y) {
    const std::int64_t g = std::gcd(x.den, y.den);
    const std::int64_t bx = x.den / g;
    const std::int64_t by = y.den / g;
    return {BigInt(x.num * by), BigInt(y.num * bx), BigInt(x.den * by)};
}

bool member_by_triple(const IntVector& v) { return gcd(v[0] - v[2], v[1]) == 1; }

std::string density_shard_name(std::int64_t dmax, std::size_t shard) {
    std::ostringstream os;
    os << "density-d" << dmax << "-shard" << shard << "-" << kCheckpointVersion << ".csv";
    return os.str();
}

std::optional<std::vector<std::uint64_t>> load_counts(const fs::path& file, std::size_t n) {
    std::ifstream in(file);
    if (!in) return std::nullopt;
    std::vector<std::uint64_t> v;
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        const auto comma = line.find(',');
        if (comma == std::string::npos) return std::nullopt;
        v.push_back(std::stoull(line.substr(comma + 1)));
    }
    if (v.size() != n) return std::nullopt;
    return v;
}

void save_counts(const fs::path& file, const std::vector<std::uint64_t>& v) {
    const fs::path tmp = file.string() + ".tmp";
    {
        std::ofstream out(tmp);
        out << "height,members\n";
        for (std::size_t h = 0; h < v.size(); ++h) out << h << ',' << v[h] << '\n';
    }
    fs::rename(tmp, file);
}

}  // namespace

DensityRow rational_density(std::int64_t d) {
    if (d < 1) throw std::invalid_argument("density needs d >= 1");
    const auto s = height_bounded_fractions(d);
    std::uint64_t members = 0;
    for (const auto& x : s) {
        for (const auto& y : s) members += member_by_triple(homogeneous(x, y));
    }
    const std::uint64_t total = s.size() * s.size();
    return {d, members, total, Rational(members, total)};
}

DensityCurve rational_density_curve(std::int64_t dmax, const DensityOptions& opts) {
    if (dmax < 1) throw std::invalid_argument("density needs d >= 1");
    const auto s = height_bounded_fractions(dmax);
    const auto H = static_cast<std::size_t>(dmax);

    // For x = a/b and y = c/e the triple of [x:y:1] has gcd(r - t, s) = gcd(a - b, c),
    // so pairs only interact through (a - b, height x) and (c, height y).
    // ycount[c][hy]: fractions y with numerator c and height hy.
    std::vector<std::vector<std::uint64_t>> ycount(H + 1, std::vector<std::uint64_t>(H + 1, 0));
    // xcount[D + dmax][hx]: fractions x with a - b = D and height hx.
    std::vector<std::vector<std::uint64_t>> xcount(2 * H + 1, std::vector<std::uint64_t>(H + 1, 0));
    for (const auto& f : s) {
        ++ycount[f.num][f.height()];
        ++xcount[f.num - f.den + dmax][f.height()];
    }

    const std::size_t shards = 2 * H + 1;
    std::vector<std::vector<std::uint64_t>> partial(shards);
    parallel_for(shards, opts.jobs, [&](std::size_t k) {
        fs::path file;
        if (opts.checkpoint_dir) {
            file = *opts.checkpoint_dir / density_shard_name(dmax, k);
            if (auto cached = load_counts(file, H + 1)) {
                partial[k] = std::move(*cached);
                return;
            }
        }
        std::vector<std::uint64_t> bucket(H + 1, 0);
        const auto& xs = xcount[k];
        if (std::any_of(xs.begin(), xs.end(), [](std::uint64_t c) { return c != 0; })) {
            const std::int64_t D = static_cast<std::int64_t>(k) - dmax;
            std::vector<std::uint64_t> coprime(H + 1, 0);
            for (std::size_t c = 1; c <= H; ++c) {
                if (std::gcd(D, static_cast<std::int64_t>(c)) != 1) continue;
                for (std::size_t hy = 1; hy <= H; ++hy) coprime[hy] += ycount[c][hy];
            }
            for (std::size_t hx = 1; hx <= H; ++hx) {
                if (xs[hx] == 0) continue;
                for (std::size_t hy = 1; hy <= H; ++hy) bucket[std::max(hx, hy)] += xs[hx] * coprime[hy];
            }
        }
        if (opts.checkpoint_dir) save_counts(file, bucket);
        partial[k] = std::move(bucket);
    });

    DensityCurve curve;
    std::vector<std::uint64_t> size_at(H + 1, 0);
    for (const auto& f : s) ++size_at[f.height()];
    std::uint64_t members = 0;
    std::uint64_t size = 0;
    for (std::size_t d = 1; d <= H; ++d) {
        for (const auto& p : partial) members += p[d];
        size += size_at[d];
        const std::uint64_t total = size * size;
        curve.rows.push_back({static_cast<std::int64_t>(d), members, total, Rational(members, total)});
    }

    if (opts.cross_check_stride > 0) {
        // Re-derive membership of a sample of pairs by actually running the reduction.
        const std::uint64_t n = s.size();
        const std::uint64_t pairs = n * n;
        const std::uint64_t stride = opts.cross_check_stride;
        const std::uint64_t samples = (pairs + stride - 1) / stride;
        const std::uint64_t per_shard = 4096;
        const std::size_t cshards = static_cast<std::size_t>((samples + per_shard - 1) / per_shard);
        parallel_for(cshards, opts.jobs, [&](std::size_t k) {
            const std::uint64_t lo = k * per_shard;
            const std::uint64_t hi = std::min(samples, lo + per_shard);
            for (std::uint64_t i = lo; i < hi; ++i) {
                const std::uint64_t idx = i * stride;
                const auto& x = s[idx / n];
                const auto& y = s[idx % n];
                const IntVector v = homogeneous(x, y);
                const ProjPointQ p(v[0], v[1], v[2]);
                const bool fast = std::gcd(x.num - x.den, y.num) == 1;
                const bool reduced = !orbit_invariants(p).singleton && braided_euclid(p).rep == base_point();
                if (fast != reduced || fast != member_by_triple(v)) {
                    throw std::logic_error("density membership disagrees with the reduction at " + p.to_string());
                }
            }
        });
        curve.cross_checked = samples;
    }
    return curve;
}

void write_density_csv(std::ostream& os, const DensityCurve& curve) {
    os << "d,members,total,ratio_num,ratio_den\n";
    for (const auto& r : curve.rows) {
        os << r.d << ',' << r.members << ',' << r.total << ',' << numerator(r.ratio) << ',' << denominator(r.ratio)
           << '\n';
    }
}

// ---------------------------------------------------------------- census

std::string CensusConvention::tag() const {
    std::string out;
    switch (range) {
        case Range::closed0: out = "closed0"; break;
        case Range::closed1: out = "closed1"; break;
        case Range::open0: out = "open0"; break;
    }
    switch (mirror) {
        case MirrorQuotient::none: break;
        case MirrorQuotient::r_ge_t: out += "-rget"; break;
        case MirrorQuotient::r_gt_t: out += "-rgtt"; break;
    }
    return out;
}

CensusConvention CensusConvention::parse(const std::string& tag) {
    for (const auto& c : all()) {
        if (c.tag() == tag) return c;
    }
    if (tag == "auto") return default_convention();
    throw std::invalid_argument("unknown census convention '" + tag + "'");
}

std::vector<CensusConvention> CensusConvention::all() {
    std::vector<CensusConvention> out;
    for (Range r : {Range::closed0, Range::closed1, Range::open0}) {
        for (MirrorQuotient m : {MirrorQuotient::none, MirrorQuotient::r_ge_t, MirrorQuotient::r_gt_t}) {
            out.push_back({r, m});
        }
    }
    return out;
}

CensusConvention default_convention() { return {Range::open0, MirrorQuotient::r_gt_t}; }

namespace {

struct Bounds {
    std::int64_t lo;
    std::int64_t hi;  // inclusive
};

Bounds bounds_of(std::int64_t bound, Range r) {
    switch (r) {
        case Range::closed0: return {0, bound};
        case Range::closed1: return {1, bound};
        case Range::open0: return {0, bound - 1};
    }
    return {0, bound};
}

bool mirror_keeps(std::int64_t r, std::int64_t t, MirrorQuotient m) {
    switch (m) {
        case MirrorQuotient::none: return true;
        case MirrorQuotient::r_ge_t: return r >= t;
        case MirrorQuotient::r_gt_t: return r > t;
    }
    return true;
}

// Calls f(r, s, t) for principal-orbit triples with the given r, in (s, t) order.
template <class F>
void scan_r(std::int64_t r, Bounds b, MirrorQuotient m, F&& f) {
    for (std::int64_t s = b.lo; s <= b.hi; ++s) {
        for (std::int64_t t = b.lo; t <= b.hi; ++t) {
            if (!mirror_keeps(r, t, m)) continue;
            if (std::gcd(r - t, s) != 1) continue;
            f(s, t);
        }
    }
}

struct CensusShard {
    std::uint64_t total = 0;
    std::uint64_t failures = 0;
    std::uint64_t failures_attach = 0;
    std::optional<ProjPointQ> first_failure;
    std::vector<CensusRow> rows;
    std::vector<bool> attach_fpu;
};

std::string degree_csv(const Degree& d) { return d ? std::to_string(*d) : "-inf"; }

Degree parse_degree(const std::string& s) {
    if (s == "-inf") return std::nullopt;
    return std::stoi(s);
}

void write_rows(std::ostream& os, const std::vector<CensusRow>& rows) {
    for (const auto& row : rows) {
        const auto& p = row.point;
        os << p.r() << ',' << p.s() << ',' << p.t() << ",1,0," << (row.fpu ? 1 : 0) << ','
           << degree_csv(row.degrees[0]) << ',' << degree_csv(row.degrees[1]) << ',' << degree_csv(row.degrees[2])
           << '\n';
    }
}

std::string census_shard_name(std::int64_t bound, const CensusConvention& c, std::int64_t r) {
    std::ostringstream os;
    os << "census-b" << bound << "-" << c.tag() << "-r" << r << "-" << kCheckpointVersion << ".csv";
    return os.str();
}

void save_shard(const fs::path& file, const CensusShard& sh) {
    const fs::path tmp = file.string() + ".tmp";
    {
        std::ofstream out(tmp);
        out << "r,s,t,n,m,fpu,degR,degS,degT,fpu_attach\n";
        for (std::size_t i = 0; i < sh.rows.size(); ++i) {
            const auto& row = sh.rows[i];
            const auto& p = row.point;
            out << p.r() << ',' << p.s() << ',' << p.t() << ",1,0," << (row.fpu ? 1 : 0) << ','
                << degree_csv(row.degrees[0]) << ',' << degree_csv(row.degrees[1]) << ','
                << degree_csv(row.degrees[2]) << ',' << (sh.attach_fpu[i] ? 1 : 0) << '\n';
        }
    }
    fs::rename(tmp, file);
}

std::optional<CensusShard> load_shard(const fs::path& file) {
    std::ifstream in(file);
    if (!in) return std::nullopt;
    CensusShard sh;
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        std::vector<std::string> f;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
        if (f.size() != 10) return std::nullopt;
        CensusRow row{ProjPointQ(parse_bigint(f[0]), parse_bigint(f[1]), parse_bigint(f[2])), f[5] == "1",
                      {parse_degree(f[6]), parse_degree(f[7]), parse_degree(f[8])}};
        const bool attach = f[9] == "1";
        ++sh.total;
        if (!row.fpu) {
            ++sh.failures;
            if (!sh.first_failure) sh.first_failure = row.point;
        }
        if (!attach) ++sh.failures_attach;
        sh.rows.push_back(std::move(row));
        sh.attach_fpu.push_back(attach);
    }
    return sh;
}

}  // namespace

std::uint64_t census_total(std::int64_t bound, const CensusConvention& c) {
    if (bound < 1) throw std::invalid_argument("census needs bound >= 1");
    const Bounds b = bounds_of(bound, c.range);
    std::uint64_t total = 0;
    for (std::int64_t r = b.lo; r <= b.hi; ++r) scan_r(r, b, c.mirror, [&](std::int64_t, std::int64_t) { ++total; });
    return total;
}

std::vector<SweepEntry> census_sweep(std::int64_t bound) {
    std::vector<SweepEntry> out;
    for (const auto& c : CensusConvention::all()) out.push_back({c, census_total(bound, c)});
    return out;
}

CensusResult unimodality_census(std::int64_t bound, const CensusConvention& c, const CensusOptions& opts) {
    if (bound < 1) throw std::invalid_argument("census needs bound >= 1");
    const Bounds b = bounds_of(bound, c.range);
    const std::size_t shards = static_cast<std::size_t>(b.hi - b.lo + 1);
    std::vector<CensusShard> parts(shards);
    const bool keep = opts.keep_rows || opts.checkpoint_dir.has_value();

    parallel_for(shards, opts.jobs, [&](std::size_t k) {
        const std::int64_t r = b.lo + static_cast<std::int64_t>(k);
        fs::path file;
        if (opts.checkpoint_dir) {
            file = *opts.checkpoint_dir / census_shard_name(bound, c, r);
            if (auto cached = load_shard(file)) {
                parts[k] = std::move(*cached);
                return;
            }
        }
        CensusShard sh;
        scan_r(r, b, c.mirror, [&](std::int64_t s, std::int64_t t) {
            const ProjPointQ p(r, s, t);
            const Deformation d = quantize_algorithmic(p);
            const bool fpu = fully_piecewise_unimodal(d, ZeroRule::skip).fully_piecewise_unimodal;
            const bool fpu_attach = fully_piecewise_unimodal(d, ZeroRule::attach).fully_piecewise_unimodal;
            ++sh.total;
            if (!fpu) {
                ++sh.failures;
                if (!sh.first_failure) sh.first_failure = p;
            }
            if (!fpu_attach) ++sh.failures_attach;
            if (keep) {
                sh.rows.push_back({p, fpu, d.degrees()});
                sh.attach_fpu.push_back(fpu_attach);
            }
        });
        if (opts.checkpoint_dir) save_shard(file, sh);
        parts[k] = std::move(sh);
    });

    CensusResult res;
    res.convention = c;
    res.bound = bound;
    for (auto& sh : parts) {
        res.total += sh.total;
        res.failures += sh.failures;
        res.failures_attach += sh.failures_attach;
        if (!res.first_failure && sh.first_failure) res.first_failure = quantize_algorithmic(*sh.first_failure);
        if (opts.keep_rows) std::move(sh.rows.begin(), sh.rows.end(), std::back_inserter(res.rows));
    }
    return res;
}

void write_census_csv(std::ostream& os, const CensusResult& result) {
    os << "r,s,t,n,m,fpu,degR,degS,degT\n";
    write_rows(os, result.rows);
}

// ---------------------------------------------------------------- Torelli search

namespace {

bool degree_le(const DegreeTriple& a, const DegreeTriple& b) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (b[i] < a[i]) return false;
    }
    return true;
}

struct FrontEntry {
    DegreeTriple degrees;
    std::string key;
    Deformation def;
};

// Keeps the degree-Pareto front; entries with equal points are merged.
void front_insert(std::vector<FrontEntry>& front, FrontEntry e) {
    for (const auto& f : front) {
        if (f.key == e.key) return;
        if (degree_le(f.degrees, e.degrees) && f.degrees != e.degrees) return;
    }
    std::erase_if(front, [&](const FrontEntry& f) { return degree_le(e.degrees, f.degrees) && f.degrees != e.degrees; });
    front.push_back(std::move(e));
}

void sort_front(std::vector<FrontEntry>& front) {
    std::sort(front.begin(), front.end(), [](const FrontEntry& a, const FrontEntry& b) {
        return a.degrees != b.degrees ? a.degrees < b.degrees : a.key < b.key;
    });
}

int degree_sum(const DegreeTriple& d) {
    int s = 0;
    for (const auto& x : d) s += x.value_or(-1);
    return s;
}

struct SearchShard {
    std::vector<std::string> words;
    std::vector<std::string> points;
    std::vector<std::string> failing_points;
    std::uint64_t failures = 0;
    bool witnesses_ok = true;
    std::vector<FrontEntry> front;
    std::vector<FrontEntry> fpu_front;
};

}  // namespace

SearchCensus torelli_search_census(const ProjPointQ& p, const TorelliParams& params, unsigned jobs) {
    const TorelliEnumerator e(p, params);
    const std::uint64_t per_shard = 2048;
    const std::size_t shards = static_cast<std::size_t>((e.size() + per_shard - 1) / per_shard);
    std::vector<SearchShard> parts(shards);

    parallel_for(shards, jobs, [&](std::size_t k) {
        SearchShard sh;
        const std::uint64_t lo = k * per_shard;
        const std::uint64_t hi = std::min(e.size(), lo + per_shard);
        for (std::uint64_t i = lo; i < hi; ++i) {
            const BraidWord twist = e.twist(i);
            const BraidWord w = e.base_witness() * twist;
            const ProjPointL point = act(w, base_point_q()).unit_normalized();
            Deformation d{p, w, point};
            // witness coherence: integral image, and the q = 1 specialization of the point
            if (act(w, base_point()) != p) sh.witnesses_ok = false;
            std::array<BigInt, 3> at1;
            for (std::size_t j = 0; j < 3; ++j) at1[j] = point.vector()[j].evaluate(EvalPoint::one).a();
            if (at1 == std::array<BigInt, 3>{0, 0, 0} || ProjPointQ(at1[0], at1[1], at1[2]) != p) {
                sh.witnesses_ok = false;
            }
            const bool fpu = fully_piecewise_unimodal(d).fully_piecewise_unimodal;
            std::string key = point.to_string();
            sh.words.push_back(twist.to_string());
            if (!fpu) {
                ++sh.failures;
                sh.failing_points.push_back(key);
            }
            sh.points.push_back(key);
            const DegreeTriple deg = d.degrees();
            if (fpu) front_insert(sh.fpu_front, {deg, key, d});
            front_insert(sh.front, {deg, std::move(key), std::move(d)});
        }
        parts[k] = std::move(sh);
    });

    SearchCensus out{p, 0, 0, 0, 0, 0, true, {}, {}, std::nullopt};
    out.raw = e.size();
    std::unordered_set<std::string> words, points, failing;
    std::vector<FrontEntry> front, fpu_front;
    for (auto& sh : parts) {
        for (auto& w : sh.words) words.insert(std::move(w));
        for (auto& x : sh.points) points.insert(std::move(x));
        for (auto& x : sh.failing_points) failing.insert(std::move(x));
        out.failures += sh.failures;
        out.all_witnesses_ok = out.all_witnesses_ok && sh.witnesses_ok;
        for (auto& f : sh.front) front_insert(front, std::move(f));
        for (auto& f : sh.fpu_front) front_insert(fpu_front, std::move(f));
    }
    out.distinct_words = words.size();
    out.distinct_points = points.size();
    out.failures_distinct = failing.size();
    sort_front(front);
    sort_front(fpu_front);
    for (auto& f : front) out.pareto.push_back(std::move(f.def));
    for (auto& f : fpu_front) out.fpu_pareto.push_back(std::move(f.def));
    if (!out.fpu_pareto.empty()) {
        out.minimal_fpu = *std::min_element(out.fpu_pareto.begin(), out.fpu_pareto.end(),
                                            [](const Deformation& a, const Deformation& b) {
                                                return degree_sum(a.degrees()) < degree_sum(b.degrees());
                                            });
    }
    return out;
}

}  // namespace burau
