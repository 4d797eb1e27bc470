#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "galrep/rng.hpp"

namespace galrep {

using u64 = uint64_t;
using u128 = unsigned __int128;
using i64 = int64_t;

// Exact arithmetic mod word-sized m (m < 2^61); products go through 128 bits.

inline u64 addmod(u64 a, u64 b, u64 m) {
    u64 s = a + b;
    return s >= m ? s - m : s;
}
inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }
inline u64 mulmod(u64 a, u64 b, u64 m) { return (u64)((u128)a * b % m); }
inline u64 negmod(u64 a, u64 m) { return a ? m - a : 0; }

u64 powmod(u64 a, u64 e, u64 m);
u64 invmod(u64 a, u64 m);             // gcd(a,m)=1 required
i64 legendre(u64 a, u64 p);           // p odd prime
u64 reduce_int(i64 a, u64 m);         // signed to [0,m)

bool is_prime(u64 n);
std::vector<std::pair<u64, int>> factor_int(u64 n);  // n>=1, ascending primes
std::vector<u64> divisors(u64 n);                    // ascending
u64 tau(u64 n);

// least positive integer generating F_p^x
u64 least_generator(u64 p);

// both square roots if a is a QR mod p, {0} if a=0, nullopt otherwise; p odd
std::optional<std::pair<u64, u64>> sqrt_mod(u64 a, u64 p);

// primes in [lo, hi] by sieve
std::vector<u64> primes_in(u64 lo, u64 hi);

// ---- F_{p^2} as x + y*sqrt(eps), eps the least generator of F_p^x ----

struct Fp2 {
    u64 x = 0, y = 0;
    bool operator==(const Fp2&) const = default;
};

class Fp2Ctx {
public:
    explicit Fp2Ctx(u64 p) : p_(p), eps_(least_generator(p)) {}
    u64 p() const { return p_; }
    u64 eps() const { return eps_; }

    Fp2 make(u64 x, u64 y = 0) const { return {x % p_, y % p_}; }
    Fp2 add(Fp2 a, Fp2 b) const { return {addmod(a.x, b.x, p_), addmod(a.y, b.y, p_)}; }
    Fp2 sub(Fp2 a, Fp2 b) const { return {submod(a.x, b.x, p_), submod(a.y, b.y, p_)}; }
    Fp2 neg(Fp2 a) const { return {negmod(a.x, p_), negmod(a.y, p_)}; }
    Fp2 mul(Fp2 a, Fp2 b) const {
        u64 x = addmod(mulmod(a.x, b.x, p_), mulmod(eps_, mulmod(a.y, b.y, p_), p_), p_);
        u64 y = addmod(mulmod(a.x, b.y, p_), mulmod(a.y, b.x, p_), p_);
        return {x, y};
    }
    Fp2 conj(Fp2 a) const { return {a.x, negmod(a.y, p_)}; }  // p-power Frobenius
    u64 norm(Fp2 a) const { return submod(mulmod(a.x, a.x, p_), mulmod(eps_, mulmod(a.y, a.y, p_), p_), p_); }
    u64 trace(Fp2 a) const { return addmod(a.x, a.x, p_); }
    Fp2 inv(Fp2 a) const {
        u64 n = invmod(norm(a), p_);
        return {mulmod(a.x, n, p_), mulmod(negmod(a.y, p_), n, p_)};
    }
    Fp2 pow(Fp2 a, u64 e) const {
        Fp2 r = make(1), b = a;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
    bool is_zero(Fp2 a) const { return a.x == 0 && a.y == 0; }
    // square root of an F_p element inside F_{p^2} (always exists)
    Fp2 sqrt_base(u64 a) const;

private:
    u64 p_, eps_;
};

} // namespace galrep
