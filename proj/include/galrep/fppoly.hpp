#pragma once

#include <utility>
#include <vector>

#include "galrep/modarith.hpp"
#include "galrep/rng.hpp"

namespace galrep {

// Univariate polynomials over F_p, coefficients little-endian, no trailing
// zeros (zero polynomial = empty vector). Schoolbook arithmetic; degrees at
// desk scale never exceed a few hundred.
struct FpPoly {
    u64 p = 0;
    std::vector<u64> c;

    int deg() const { return (int)c.size() - 1; }  // deg(0) = -1
    bool is_zero() const { return c.empty(); }
    u64 lead() const { return c.back(); }
    bool operator==(const FpPoly&) const = default;
};

FpPoly fp_poly(u64 p, std::vector<u64> coeffs);  // normalizes
FpPoly fp_zero(u64 p);
FpPoly fp_const(u64 p, u64 v);
FpPoly fp_x(u64 p);

FpPoly fp_add(const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b);
FpPoly fp_scale(const FpPoly& a, u64 s);
FpPoly fp_monic(const FpPoly& a);
std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b);
FpPoly fp_mod(const FpPoly& a, const FpPoly& b);
FpPoly fp_gcd(FpPoly a, FpPoly b);  // monic
FpPoly fp_derive(const FpPoly& a);
u64 fp_eval(const FpPoly& a, u64 x);
FpPoly fp_powmod(const FpPoly& a, u64 e, const FpPoly& f);
// x^(p^k) mod f, repeated Frobenius
FpPoly fp_frobenius(const FpPoly& f, int k);

bool fp_irreducible(const FpPoly& f);

// Cantor-Zassenhaus. Factors monic, sorted by degree then lexicographically
// by coefficient sequence (constant term first). Product with multiplicities
// reproduces f up to the leading unit.
std::vector<std::pair<FpPoly, int>> fp_factor(const FpPoly& f, Rng& rng);
std::vector<u64> fp_roots(const FpPoly& f, Rng& rng);  // distinct, ascending

bool fp_less(const FpPoly& a, const FpPoly& b);  // canonical order

} // namespace galrep
