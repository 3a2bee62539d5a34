#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "burau/braid.hpp"
#include "burau/eisenstein.hpp"
#include "burau/laurent.hpp"
#include "burau/orbits.hpp"
#include "burau/projective.hpp"

namespace burau {

// Degree of a coordinate; nullopt stands for the zero polynomial and orders
// below every integer.
using Degree = std::optional<int>;
using DegreeTriple = std::array<Degree, 3>;

std::string to_string(const Degree& d);

// A member of the quantization of an integer point of the principal orbit:
// rho_q(witness)[0:1:0], scaled by a unit to polynomial form.
struct Deformation {
    ProjPointQ target;
    BraidWord witness;
    ProjPointL point;

    DegreeTriple degrees() const;
};

// Quantization through the braided Euclidean witness. Throws DomainError if p
// is not in the principal orbit.
Deformation quantize_algorithmic(const ProjPointQ& p);

// Quantization through a caller-supplied witness. Throws DomainError when
// rho(w)[0:1:0] != expected; the message reports the actual image.
Deformation quantize_with_braid(const BraidWord& w, const ProjPointQ& expected);

struct SignBlock {
    int sign;                     // +1 or -1
    std::vector<BigInt> run;      // signed coefficients, interior zeros included
    bool unimodal;
};

struct CoordinateUnimodality {
    std::vector<SignBlock> blocks;
    bool unimodal = true;
};

struct UnimodalityReport {
    std::array<CoordinateUnimodality, 3> coords;
    bool fully_piecewise_unimodal = true;
};

// Splits the coefficient sequence (lowest to highest nonzero term) into
// maximal blocks of constant sign. Zero coefficients are kept in the block
// that is open when they occur but are skipped by the unimodality test, which
// requires the absolute values to weakly increase and then weakly decrease.
// How interior zero coefficients enter the per-block unimodality test. Either
// way they stay inside the current block's run; `skip` ignores them when
// comparing magnitudes, `attach` treats them as magnitude 0.
enum class ZeroRule { skip, attach };

CoordinateUnimodality piecewise_unimodal(const LaurentPoly& p, ZeroRule rule = ZeroRule::skip);

UnimodalityReport fully_piecewise_unimodal(const ProjPointL& point, ZeroRule rule = ZeroRule::skip);
inline UnimodalityReport fully_piecewise_unimodal(const Deformation& d, ZeroRule rule = ZeroRule::skip) {
    return fully_piecewise_unimodal(d.point, rule);
}

struct MinimalDeformation {
    bool unique = false;
    // Pareto front under componentwise degree order, one entry per distinct
    // point, in input order.
    std::vector<Deformation> front;
};

// Throws std::invalid_argument on an empty candidate set.
MinimalDeformation minimal_deformation(const std::vector<Deformation>& candidates);

// Continued fraction r/s = [a1, ..., a_{2k+1}] of odd length (a_i >= 1 for
// i >= 2). Requires s > 0, gcd(r, s) = 1.
std::vector<BigInt> odd_continued_fraction(const BigInt& r, const BigInt& s);

// q-deformed rational of r/s: second column of the B3 Burau image of
// s1^a1 s2^-a2 ... s1^a_{2k+1}, scaled to polynomials. Throws
// std::invalid_argument for s <= 0 or gcd(r, s) != 1.
std::pair<LaurentPoly, LaurentPoly> q_rational(const BigInt& r, const BigInt& s);

// [R:S:0] from q_rational equals the algorithmic quantization of [r:s:0].
bool check_embedding_theorem(const BigInt& r, const BigInt& s);

// ev_j(rho_q(witness))[0:1:0], canonicalized. The single-argument form uses
// the braided Euclidean witness. Throws DomainError outside the principal orbit.
ProjPointE j_deform(const ProjPointQ& p);
ProjPointE j_deform(const ProjPointQ& p, const BraidWord& witness);

// Action on a Z[j]-vector of a braid specialized at one of the exact points.
std::array<Eisenstein, 3> act_vector_at(const BraidWord& w, std::array<Eisenstein, 3> v, EvalPoint z);

struct NormProfile {
    std::array<BigInt, 3> norms;
    // N(R) <= 1, N(T) <= 1 and N(S) in {0, 1, 3}
    bool observed_pattern;
};

NormProfile eisenstein_norm_profile(const ProjPointE& e);

// Parameters of the Torelli-twisted search beta_p * g tau g^-1.
struct TorelliParams {
    std::vector<BraidWord> taus;  // default {tau1^2, tau1^2 tau3^2}
    std::int64_t exp_lo = -4;     // block exponents range over [exp_lo, exp_hi)
    std::int64_t exp_hi = 4;
    int max_blocks = 2;           // g is a product of 1..max_blocks blocks s1^a s2^b s3^c

    static TorelliParams defaults();
};

// Random-access view of the search space; index order is deterministic:
// block count, then block exponents (a1, b1, c1, a2, ...) lexicographically,
// then tau. With an empty exponent range the only member is the algorithmic
// witness itself.
class TorelliEnumerator {
public:
    TorelliEnumerator(const ProjPointQ& p, TorelliParams params);

    std::uint64_t size() const noexcept { return size_; }
    const BraidWord& base_witness() const noexcept { return base_; }

    // g tau g^-1 for the given index (identity for the degenerate space).
    BraidWord twist(std::uint64_t index) const;
    BraidWord witness(std::uint64_t index) const { return base_ * twist(index); }
    Deformation deformation(std::uint64_t index) const;

private:
    ProjPointQ target_;
    TorelliParams params_;
    BraidWord base_;
    std::uint64_t width_ = 0;  // exponent choices per block exponent
    std::vector<std::uint64_t> offsets_;  // first index for each block count
    std::uint64_t size_ = 0;
};

// Materializes the whole search space (small parameter sets only). Raw
// enumeration by default; with dedupe_points, later members equal (eq_lambda)
// to an earlier one are dropped.
std::vector<Deformation> torelli_deformations(const ProjPointQ& p, const TorelliParams& params,
                                              bool dedupe_points = false);

}  // namespace burau
