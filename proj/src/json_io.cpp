#include "burau/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace burau::json_io {

json integer(const BigInt& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(x);
    }
    return x.str();
}

json decimal(const BigInt& x) { return x.str(); }

json poly(const LaurentPoly& p) {
    json out = json::array();
    for (const auto& t : p.terms()) out.push_back(json::array({t.exp, t.coef.str()}));
    return out;
}

LaurentPoly poly_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of [exp, coef] pairs");
    std::vector<LaurentPoly::Term> terms;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("malformed polynomial term");
        terms.push_back({pair[0].get<int>(), parse_bigint(pair[1].get<std::string>())});
    }
    return LaurentPoly::from_terms(std::move(terms));
}

json eisenstein(const Eisenstein& e) { return {{"a", e.a().str()}, {"b", e.b().str()}}; }

json point(const ProjPointQ& p) {
    return {{"type", "PQ"}, {"coords", {p.r().str(), p.s().str(), p.t().str()}}};
}

json point(const ProjPointL& p) {
    return {{"type", "PL"}, {"coords", {p.r().to_string(), p.s().to_string(), p.t().to_string()}}};
}

ProjPointQ point_q_from_json(const json& j) {
    if (j.at("type") != "PQ") throw std::invalid_argument("expected a PQ point");
    const auto& c = j.at("coords");
    return {parse_bigint(c.at(0).get<std::string>()), parse_bigint(c.at(1).get<std::string>()),
            parse_bigint(c.at(2).get<std::string>())};
}

ProjPointL point_l_from_json(const json& j) {
    if (j.at("type") != "PL") throw std::invalid_argument("expected a PL point");
    const auto& c = j.at("coords");
    return {parse_poly(c.at(0).get<std::string>()), parse_poly(c.at(1).get<std::string>()),
            parse_poly(c.at(2).get<std::string>())};
}

json degree(const Degree& d) { return d ? json(*d) : json("-inf"); }

json orbit_class(const OrbitClass& c) {
    if (c.singleton) return {{"singleton", true}};
    return {{"n", integer(c.n)}, {"m", integer(c.m)}, {"singleton", false}};
}

json trace(const ReductionTrace& t) {
    json steps = json::array();
    for (const auto& s : t.steps) {
        steps.push_back({{"gen", s.gen}, {"exp", s.exp}, {"after", point(s.after)}});
    }
    return {{"input", point(t.input)},     {"braid", t.braid.to_string()}, {"rep", point(t.rep)},
            {"steps", steps},              {"iterations", t.loop_iterations}, {"mirrored", t.mirrored}};
}

json deformation(const Deformation& d) {
    const auto deg = d.degrees();
    return {{"target", point(d.target)},
            {"witness", d.witness.to_string()},
            {"R", d.point.r().to_string()},
            {"S", d.point.s().to_string()},
            {"T", d.point.t().to_string()},
            {"degrees", {degree(deg[0]), degree(deg[1]), degree(deg[2])}},
            {"fully_piecewise_unimodal", fully_piecewise_unimodal(d).fully_piecewise_unimodal}};
}

namespace {

template <class T, class F>
json rows(const Matrix<T>& m, F&& cell) {
    json out = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.size(); ++k) row.push_back(cell(m(i, k)));
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace

json matrix(const Matrix<LaurentPoly>& m) {
    return rows(m, [](const LaurentPoly& p) { return json(p.to_string()); });
}

json matrix(const Matrix<BigInt>& m) {
    return rows(m, [](const BigInt& x) { return json(x.str()); });
}

json matrix(const Matrix<Eisenstein>& m) {
    return rows(m, [](const Eisenstein& e) { return json(e.to_string()); });
}

}  // namespace burau::json_io
