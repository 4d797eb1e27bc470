#pragma once

#include <gmpxx.h>

#include <vector>

#include "galrep/fppoly.hpp"
#include "galrep/modarith.hpp"
#include "galrep/rng.hpp"

namespace galrep {

// F_{p^k} = F_p[t]/(m(t)) with a deterministic irreducible modulus chosen
// from (p, k). Elements are coefficient vectors of length k.
struct Fq {
    std::vector<u64> c;
    bool operator==(const Fq&) const = default;
};

class FqCtx {
public:
    FqCtx(u64 p, int k);

    u64 p() const { return p_; }
    int k() const { return k_; }
    const FpPoly& modulus() const { return mod_; }

    Fq zero() const { return {std::vector<u64>(k_, 0)}; }
    Fq one() const { return from_base(1); }
    Fq from_base(u64 v) const;
    Fq gen() const;  // the class of t
    bool is_zero(const Fq& a) const;

    Fq add(const Fq& a, const Fq& b) const;
    Fq sub(const Fq& a, const Fq& b) const;
    Fq neg(const Fq& a) const;
    Fq mul(const Fq& a, const Fq& b) const;
    Fq mulbase(const Fq& a, u64 s) const;
    Fq inv(const Fq& a) const;
    Fq pow(const Fq& a, const mpz_class& e) const;
    Fq frobenius(const Fq& a) const;  // a^p

    // square root if a is a square (q odd), nullopt otherwise
    std::optional<Fq> sqrt(const Fq& a, Rng& rng) const;
    bool is_square(const Fq& a) const;

    Fq random(Rng& rng) const;

    mpz_class q() const;  // p^k

private:
    u64 p_;
    int k_;
    FpPoly mod_;
    FpPoly frob_x_;  // t^p mod m, powers composed for frobenius
};

} // namespace galrep
