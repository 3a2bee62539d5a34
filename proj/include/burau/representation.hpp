#pragma once

#include <array>

#include "burau/bigint.hpp"
#include "burau/braid.hpp"
#include "burau/eisenstein.hpp"
#include "burau/laurent.hpp"
#include "burau/matrix.hpp"

namespace burau {

using PolyMatrix = Matrix<LaurentPoly>;
using IntMatrix = Matrix<BigInt>;
using EisensteinMatrix = Matrix<Eisenstein>;
using RationalMatrix = Matrix<Rational>;

using PolyVector = std::array<LaurentPoly, 3>;
using IntVector = std::array<BigInt, 3>;

// Reduced Burau matrices of sigma_gen (inverse = true gives the exact inverse,
// whose entries involve q^-1).
PolyMatrix burau_generator(int gen, bool inverse = false);
IntMatrix integral_generator(int gen, bool inverse = false);
PolyMatrix burau3_generator(int gen, bool inverse = false);

// 3x3 reduced Burau image of a 4-strand word, q the formal parameter.
PolyMatrix rho_q(const BraidWord& w);
// Integral Burau image (q = 1), computed with integer matrices directly.
IntMatrix rho_int(const BraidWord& w);
// 2x2 Burau image of a 3-strand word.
PolyMatrix rho3_q(const BraidWord& w);

EisensteinMatrix specialize(const PolyMatrix& m, EvalPoint z);
RationalMatrix specialize(const PolyMatrix& m, const Rational& z);

// In-place action of sigma_gen^exp on a column vector, one generator step at
// a time (no matrix products). Used by the point actions.
void act_in_place(PolyVector& v, int gen, std::int64_t exp);
void act_in_place(IntVector& v, int gen, const BigInt& exp);

}  // namespace burau
