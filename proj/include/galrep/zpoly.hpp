#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "galrep/fppoly.hpp"
#include "galrep/modarith.hpp"

namespace galrep {

// Polynomials over Z, coefficients little-endian, no trailing zeros.
struct ZPoly {
    std::vector<mpz_class> c;

    int deg() const { return (int)c.size() - 1; }
    bool is_zero() const { return c.empty(); }
    const mpz_class& lead() const { return c.back(); }
    bool operator==(const ZPoly&) const = default;
};

ZPoly z_poly(std::vector<mpz_class> coeffs);
ZPoly z_const(const mpz_class& v);
ZPoly z_x();

ZPoly z_add(const ZPoly& a, const ZPoly& b);
ZPoly z_sub(const ZPoly& a, const ZPoly& b);
ZPoly z_mul(const ZPoly& a, const ZPoly& b);
ZPoly z_scale(const ZPoly& a, const mpz_class& s);
ZPoly z_neg(const ZPoly& a);
ZPoly z_derive(const ZPoly& a);
mpz_class z_eval(const ZPoly& a, const mpz_class& x);
// division in Q[x] that is exact in Z[x] (caller guarantees divisibility)
ZPoly z_divexact(const ZPoly& a, const ZPoly& b);
// pseudo-division: returns (q, r) with lc(b)^k * a = q*b + r
std::pair<ZPoly, ZPoly> z_pseudo_divmod(const ZPoly& a, const ZPoly& b);
bool z_divides(const ZPoly& b, const ZPoly& a);  // b | a in Z[x]

mpz_class z_content(const ZPoly& a);
ZPoly z_primitive(const ZPoly& a);  // content removed, leading coefficient > 0

FpPoly z_mod_p(const ZPoly& a, u64 p);

// gcd in Z[x] of primitive polynomials (via modular images; result primitive)
ZPoly z_gcd(const ZPoly& a, const ZPoly& b, Rng& rng);

// resultant of a and b over Z (Sylvester determinant, fraction-free)
mpz_class z_resultant(const ZPoly& a, const ZPoly& b);

// Irreducible factorization over Q of a squarefree primitive polynomial,
// returned as primitive integer polynomials with positive leading
// coefficients, sorted by degree then lexicographically by coefficients.
// Mod-p factorization + Hensel lifting + naive subset recombination.
// Throws std::invalid_argument past the degree cap and std::runtime_error
// if the recombination budget is exhausted.
std::vector<ZPoly> hensel_factor_z(const ZPoly& f, Rng& rng, int degree_cap = 84);

// smallest degree of an irreducible factor of squarefree primitive f over Q;
// stops as soon as a factor of degree <= bound is found (bound 0 = no bound)
int z_min_factor_degree(const ZPoly& f, Rng& rng, int degree_cap = 84);

bool z_less(const ZPoly& a, const ZPoly& b);

} // namespace galrep
