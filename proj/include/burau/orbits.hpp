#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "burau/bigint.hpp"
#include "burau/braid.hpp"
#include "burau/projective.hpp"

namespace burau {

// Orbit of a point under the integral action: n = gcd(r - t, s) and
// m = +-r mod n folded into [0, n/2]. The fixed point [1:0:1] is the only
// point with n = 0 and is flagged as the singleton orbit.
struct OrbitClass {
    BigInt n;
    BigInt m;
    bool singleton = false;

    friend bool operator==(const OrbitClass&, const OrbitClass&) = default;

    // [m:n:m]; throws DomainError for the singleton class.
    ProjPointQ representative() const;
    std::string to_string() const;
};

OrbitClass orbit_invariants(const ProjPointQ& p);

bool same_orbit(const ProjPointQ& a, const ProjPointQ& b);

struct ReductionStep {
    int gen;
    std::int64_t exp;
    ProjPointQ after;
};

struct ReductionTrace {
    ProjPointQ input;
    std::vector<ReductionStep> steps;  // in application order
    BraidWord braid;                   // reducing braid, last-applied letter leftmost
    ProjPointQ rep;
    int loop_iterations = 0;           // passes through the sigma_2 loop
    bool mirrored = false;             // final s1 s2^2 s3 was appended
};

enum class Mirror { none, canonical };

// Braided Euclidean reduction of p to [m:n:m]. With Mirror::canonical the
// representative is folded to m <= n/2 by a final s1 s2^2 s3.
// Throws DomainError for the singleton point [1:0:1].
ReductionTrace braided_euclid(const ProjPointQ& p, Mirror mirror = Mirror::canonical);

// Words over the generators of Stab([m:n:m]) modulo the braid Torelli group.
enum class StabGen { sigma2, tau1_delta, mirror, tau1, delta };

std::string to_string(StabGen g);
BraidWord stab_generator_braid(StabGen g);

struct StabFactor {
    StabGen gen;
    std::int64_t exp;
    friend bool operator==(const StabFactor&, const StabFactor&) = default;
};

struct StabilizerDecomposition {
    std::vector<StabFactor> word;
    bool negated = false;             // rho(w) sends (m,n,m) to -(m,n,m)
    std::int64_t a = 0;               // the (0,0) entry after clearing the sigma_2 part
    std::int64_t x = 0;               // the (1,0) entry of rho(w)
    bool residual_is_torelli = false; // rho(w * braid()^-1) == I

    BraidWord braid() const;
    std::string to_string() const;
};

// Writes rho(w) as a word in sigma_2, tau1*Delta (and s1 s2^2 s3 for n = 2,
// or tau1 and Delta separately for n = 1). Throws DomainError if rho(w) does
// not fix [m:n:m], std::logic_error on the impossible -1 eigenvalue case.
StabilizerDecomposition stabilizer_decompose(const BraidWord& w, const OrbitClass& cls);

// Reduced fraction with positive denominator.
struct Fraction {
    BigInt num;
    BigInt den;
    Fraction(BigInt n, BigInt d);
};

// The affine line y = slope*x + intercept lies in the principal orbit.
bool line_in_principal(const Fraction& slope, const Fraction& intercept);
// The vertical line x = abscissa lies in the principal orbit.
bool vertical_line_in_principal(const Fraction& abscissa);

// The eight images of [x:y:1] under the dihedral group generated by the
// quarter turn [x:y:1] -> [1-y : x-1 : 1] and the reflection y -> -y, in the
// order rot^0..rot^3, then rot^0..rot^3 after the reflection.
// Throws DomainError when t = 0.
std::vector<ProjPointQ> d4_images(const ProjPointQ& p);

// P_k = [n0(km+1)+m0 : n0(kn+1) : n0 k m + m0], a point of Orb([m0:n0:m0])
// converging to [m:n:m].
ProjPointQ density_witness(const BigInt& m, const BigInt& n, const BigInt& m0, const BigInt& n0, const BigInt& k);

}  // namespace burau
