#pragma once

#include <json.hpp>

#include "burau/bigint.hpp"
#include "burau/eisenstein.hpp"
#include "burau/laurent.hpp"
#include "burau/matrix.hpp"
#include "burau/orbits.hpp"
#include "burau/projective.hpp"
#include "burau/quantize.hpp"

namespace burau::json_io {

using nlohmann::json;

// A JSON number when it fits in 64 bits, otherwise a decimal string.
json integer(const BigInt& x);
json decimal(const BigInt& x);  // always a string

// Sorted [exponent, "coefficient"] pairs.
json poly(const LaurentPoly& p);
LaurentPoly poly_from_json(const json& j);

json eisenstein(const Eisenstein& e);  // {"a": "..", "b": ".."}

json point(const ProjPointQ& p);  // {"type":"PQ","coords":["r","s","t"]}
json point(const ProjPointL& p);  // {"type":"PL","coords":[poly text x3]}
ProjPointQ point_q_from_json(const json& j);
ProjPointL point_l_from_json(const json& j);

json degree(const Degree& d);  // integer, or "-inf" for the zero polynomial

json orbit_class(const OrbitClass& c);
json trace(const ReductionTrace& t);
json deformation(const Deformation& d);

json matrix(const Matrix<LaurentPoly>& m);
json matrix(const Matrix<BigInt>& m);
json matrix(const Matrix<Eisenstein>& m);

}  // namespace burau::json_io
