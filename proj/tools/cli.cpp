#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "burau/error.hpp"
#include "burau/json_io.hpp"
#include "burau/plot.hpp"
#include "burau/representation.hpp"
#include "burau/stats.hpp"
#include "burau/verify.hpp"

namespace burau::cli {
namespace {

using json_io::json;

struct Globals {
    unsigned jobs = 0;
    std::string out_path;
    std::string format;
};

struct Triple {
    std::string r, s, t;
    ProjPointQ point() const { return {parse_bigint(r), parse_bigint(s), parse_bigint(t)}; }
};

void add_triple(CLI::App* cmd, Triple& t) {
    cmd->add_option("r", t.r, "first coordinate")->required();
    cmd->add_option("s", t.s, "second coordinate")->required();
    cmd->add_option("t", t.t, "third coordinate")->required();
}

class Output {
public:
    Output(const Globals& g, std::ostream& fallback) : g_(g), fallback_(fallback) {}

    void write(const std::string& text) {
        if (g_.out_path.empty()) {
            fallback_ << text;
            return;
        }
        std::ofstream f(g_.out_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open " + g_.out_path + " for writing");
        f << text;
    }

    void write(const json& j) { write(j.dump(2) + "\n"); }

private:
    const Globals& g_;
    std::ostream& fallback_;
};

std::string format_or(const Globals& g, const std::string& dflt) { return g.format.empty() ? dflt : g.format; }

void require_format(const Globals& g, const std::string& dflt, std::initializer_list<const char*> allowed) {
    const std::string f = format_or(g, dflt);
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return f == a; })) {
        throw CLI::ValidationError("--format", "format '" + f + "' is not available for this subcommand");
    }
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
    const auto colon = text.find(':', text[0] == '-' ? 1 : 0);
    if (colon == std::string::npos) throw CLI::ValidationError("--range", "expected lo:hi");
    try {
        return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--range", "expected integers lo:hi");
    }
}

json search_json(const SearchCensus& c) {
    json front = json::array();
    for (const auto& d : c.pareto) front.push_back(json_io::deformation(d));
    json fpu_front = json::array();
    for (const auto& d : c.fpu_pareto) fpu_front.push_back(json_io::deformation(d));
    return {{"point", json_io::point(c.point)},
            {"raw", c.raw},
            {"distinct_words", c.distinct_words},
            {"distinct_points", c.distinct_points},
            {"failures", c.failures},
            {"failures_distinct", c.failures_distinct},
            {"witnesses_ok", c.all_witnesses_ok},
            {"pareto_front", front},
            {"fpu_pareto_front", fpu_front},
            {"minimal_fpu", c.minimal_fpu ? json_io::deformation(*c.minimal_fpu) : json(nullptr)}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Burau representation of B4 acting on the rational projective plane", "burau"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--jobs", g.jobs, "worker threads (default: all cores)");
    app.add_option("--out", g.out_path, "write the result to this file");
    app.add_option("--format", g.format, "json, csv or svg")->check(CLI::IsMember({"json", "csv", "svg"}));

    Triple tri;
    auto* classify = app.add_subcommand("classify", "orbit invariants of [r:s:t]");
    add_triple(classify, tri);

    bool mirror = false;
    auto* reduce = app.add_subcommand("reduce", "braided Euclidean reduction of [r:s:t]");
    add_triple(reduce, tri);
    reduce->add_flag("--mirror", mirror, "fold the representative to m <= n/2");

    std::string braid_text, search_mode;
    auto* quantize = app.add_subcommand("quantize", "deformation of a principal-orbit point");
    add_triple(quantize, tri);
    auto* braid_opt = quantize->add_option("--braid", braid_text, "witness braid sending [0:1:0] to the point");
    quantize->add_option("--search", search_mode, "search Torelli twists for a degree-minimal deformation")
        ->check(CLI::IsMember({"defaults"}))
        ->excludes(braid_opt);

    auto* jdeform = app.add_subcommand("jdeform", "deformation specialized at q = j");
    add_triple(jdeform, tri);

    std::string tau = "both", range = "-4:3";
    int blocks = 2;
    auto* search = app.add_subcommand("search", "Torelli-twisted deformation census of one point");
    add_triple(search, tri);
    search->add_option("--tau", tau, "t1 (tau1^2), t1t3 (tau1^2 tau3^2) or both")
        ->check(CLI::IsMember({"t1", "t1t3", "both"}));
    search->add_option("--range", range, "inclusive exponent range lo:hi");
    search->add_option("--blocks", blocks, "maximum number of s1^a s2^b s3^c blocks")->check(CLI::NonNegativeNumber);

    std::int64_t dmax = 200;
    std::uint64_t stride = 100;
    std::string checkpoint;
    auto* density = app.add_subcommand("density", "rational density curve of the principal orbit");
    density->add_option("--dmax", dmax, "largest height d")->check(CLI::PositiveNumber);
    density->add_option("--cross-check-stride", stride, "re-reduce every k-th pair (0 disables)");
    density->add_option("--checkpoint", checkpoint, "directory for resumable shard files");

    std::int64_t bound = 100;
    std::string convention = "auto";
    auto* census = app.add_subcommand("census", "unimodality census of bounded triples");
    census->add_option("--bound", bound, "coordinate bound")->check(CLI::PositiveNumber);
    census->add_option("--convention", convention, "enumeration convention tag or auto");
    census->add_option("--checkpoint", checkpoint, "directory for resumable shard files");

    std::string chart = "orbit_map", window = "-10:10:-10:10";
    std::int64_t den = 1;
    int size_px = 600;
    auto* plot = app.add_subcommand("plot", "SVG orbit map or density curve");
    plot->add_option("--chart", chart, "orbit_map or density_curve")
        ->check(CLI::IsMember({"orbit_map", "density_curve"}));
    plot->add_option("--den", den, "grid step is 1/den")->check(CLI::PositiveNumber);
    plot->add_option("--window", window, "x_lo:x_hi:y_lo:y_hi in grid units");
    plot->add_option("--size", size_px, "canvas size in pixels")->check(CLI::PositiveNumber);
    plot->add_option("--dmax", dmax, "largest height for the density curve")->check(CLI::PositiveNumber);

    std::string suite = "paper-examples";
    bool full = false;
    auto* verify = app.add_subcommand("verify", "run the worked-example suite");
    verify->add_option("--suite", suite, "suite name")->check(CLI::IsMember({"paper-examples"}));
    verify->add_flag("--full", full, "include the census, density and Torelli searches");

    std::string rep = "q", word;
    auto* eval = app.add_subcommand("eval", "matrix image of a braid word");
    eval->add_option("--rep", rep, "q, int or q3")->check(CLI::IsMember({"q", "int", "q3"}));
    eval->add_option("--word", word, "braid word, e.g. \"s1^-1 s3^2 tau1\"")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    Output sink(g, out);
    try {
        if (classify->parsed()) {
            require_format(g, "json", {"json"});
            sink.write(json_io::orbit_class(orbit_invariants(tri.point())));
        } else if (reduce->parsed()) {
            require_format(g, "json", {"json"});
            sink.write(json_io::trace(braided_euclid(tri.point(), mirror ? Mirror::canonical : Mirror::none)));
        } else if (quantize->parsed()) {
            require_format(g, "json", {"json"});
            const ProjPointQ p = tri.point();
            if (!braid_text.empty()) {
                sink.write(json_io::deformation(quantize_with_braid(parse_braid(expand_named_tokens(braid_text)), p)));
            } else if (!search_mode.empty()) {
                const SearchCensus c = torelli_search_census(p, TorelliParams::defaults(), g.jobs);
                json j = json_io::deformation(c.pareto.front());
                j["pareto_unique"] = c.pareto.size() == 1;
                j["pareto_front"] = search_json(c)["pareto_front"];
                sink.write(j);
            } else {
                sink.write(json_io::deformation(quantize_algorithmic(p)));
            }
        } else if (jdeform->parsed()) {
            require_format(g, "json", {"json"});
            const ProjPointE e = j_deform(tri.point());
            const NormProfile n = eisenstein_norm_profile(e);
            sink.write(json{{"R", json_io::eisenstein(e.r())},
                            {"S", json_io::eisenstein(e.s())},
                            {"T", json_io::eisenstein(e.t())},
                            {"text", e.to_string()},
                            {"norms", {json_io::integer(n.norms[0]), json_io::integer(n.norms[1]),
                                       json_io::integer(n.norms[2])}},
                            {"observed_norm_pattern", n.observed_pattern}});
        } else if (search->parsed()) {
            require_format(g, "json", {"json"});
            TorelliParams params;
            if (tau != "t1t3") params.taus.push_back(tau1().pow(2));
            if (tau != "t1") params.taus.push_back(tau1().pow(2) * tau3().pow(2));
            const auto [lo, hi] = parse_range(range);
            params.exp_lo = lo;
            params.exp_hi = hi + 1;
            params.max_blocks = blocks;
            sink.write(search_json(torelli_search_census(tri.point(), params, g.jobs)));
        } else if (density->parsed()) {
            require_format(g, "csv", {"csv", "json"});
            DensityOptions o;
            o.jobs = g.jobs;
            o.cross_check_stride = stride;
            if (!checkpoint.empty()) {
                std::filesystem::create_directories(checkpoint);
                o.checkpoint_dir = checkpoint;
            }
            const DensityCurve c = rational_density_curve(dmax, o);
            const auto& last = c.rows.back();
            err << "d=" << last.d << " ratio=" << static_cast<double>(last.ratio) << " cross-checked "
                << c.cross_checked << " pairs\n";
            if (format_or(g, "csv") == "csv") {
                std::ostringstream os;
                write_density_csv(os, c);
                sink.write(os.str());
            } else {
                json rows = json::array();
                for (const auto& r : c.rows) {
                    rows.push_back({{"d", r.d}, {"members", r.members}, {"total", r.total},
                                    {"ratio", numerator(r.ratio).str() + "/" + denominator(r.ratio).str()}});
                }
                sink.write(json{{"rows", rows}, {"cross_checked", c.cross_checked}});
            }
        } else if (census->parsed()) {
            require_format(g, "json", {"json", "csv"});
            const auto sweep = census_sweep(bound);
            json tried = json::array();
            std::optional<CensusConvention> chosen;
            for (const auto& e : sweep) {
                err << "convention " << e.convention.tag() << ": total " << e.total << "\n";
                tried.push_back({{"convention", e.convention.tag()}, {"total", e.total}});
                if (!chosen && e.total == 302172) chosen = e.convention;
            }
            const CensusConvention c =
                convention == "auto" ? chosen.value_or(default_convention()) : CensusConvention::parse(convention);
            err << "using " << c.tag() << "\n";
            CensusOptions o;
            o.jobs = g.jobs;
            o.keep_rows = format_or(g, "json") == "csv";
            if (!checkpoint.empty()) {
                std::filesystem::create_directories(checkpoint);
                o.checkpoint_dir = checkpoint;
            }
            const CensusResult res = unimodality_census(bound, c, o);
            if (o.keep_rows) {
                std::ostringstream os;
                write_census_csv(os, res);
                sink.write(os.str());
            } else {
                sink.write(json{{"convention", c.tag()},
                                {"bound", bound},
                                {"total", res.total},
                                {"failures", res.failures},
                                {"failures_zero_attach", res.failures_attach},
                                {"first_failure", res.first_failure ? json_io::deformation(*res.first_failure)
                                                                    : json(nullptr)},
                                {"sweep", tried}});
            }
        } else if (plot->parsed()) {
            require_format(g, "svg", {"svg"});
            if (chart == "orbit_map") {
                OrbitMapSpec spec;
                spec.den = den;
                spec.size_px = size_px;
                std::vector<std::int64_t> w;
                std::stringstream ss(window);
                for (std::string part; std::getline(ss, part, ':');) w.push_back(std::stoll(part));
                if (w.size() != 4) throw CLI::ValidationError("--window", "expected x_lo:x_hi:y_lo:y_hi");
                spec.x_lo = w[0], spec.x_hi = w[1], spec.y_lo = w[2], spec.y_hi = w[3];
                sink.write(plot_orbits(spec));
            } else {
                DensityOptions o;
                o.jobs = g.jobs;
                o.cross_check_stride = 0;
                sink.write(plot_density(rational_density_curve(dmax, o)));
            }
        } else if (verify->parsed()) {
            VerifyOptions o;
            o.full = full;
            o.jobs = g.jobs;
            bool ok = true;
            std::ostringstream os;
            for (const auto& r : verify_worked_examples(o)) {
                os << (r.informational ? "INFO " : r.passed ? "PASS " : "FAIL ") << r.name;
                if (!r.detail.empty()) os << ": " << r.detail;
                os << "\n";
                ok = ok && r.passed;
            }
            sink.write(os.str());
            return ok ? 0 : 1;
        } else if (eval->parsed()) {
            require_format(g, "json", {"json"});
            const std::string expanded = expand_named_tokens(word);
            if (rep == "q3") {
                sink.write(json_io::matrix(rho3_q(parse_braid(expanded, 3))));
            } else if (rep == "int") {
                sink.write(json_io::matrix(rho_int(parse_braid(expanded, 4))));
            } else {
                sink.write(json_io::matrix(rho_q(parse_braid(expanded, 4))));
            }
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace burau::cli
