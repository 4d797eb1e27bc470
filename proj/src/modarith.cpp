#include "galrep/modarith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace galrep {

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 m) {
    i64 t = 0, nt = 1;
    i64 r = (i64)m, nr = (i64)(a % m);
    while (nr != 0) {
        i64 q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw std::invalid_argument("invmod: not invertible");
    return (u64)(t < 0 ? t + (i64)m : t);
}

i64 legendre(u64 a, u64 p) {
    a %= p;
    if (a == 0) return 0;
    u64 r = powmod(a, (p - 1) / 2, p);
    return r == 1 ? 1 : -1;
}

u64 reduce_int(i64 a, u64 m) {
    i64 r = a % (i64)m;
    if (r < 0) r += (i64)m;
    return (u64)r;
}

static bool miller_rabin(u64 n, u64 a) {
    if (a % n == 0) return true;
    u64 d = n - 1;
    int s = 0;
    while (!(d & 1)) d >>= 1, s++;
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; i++) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (n % p == 0) return n == p;
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (!miller_rabin(n, a)) return false;
    return true;
}

static u64 pollard_rho(u64 n) {
    if (!(n & 1)) return 2;
    Rng rng(n ^ 0xdeadbeefULL);
    for (;;) {
        u64 c = rng.below(n - 1) + 1;
        u64 x = rng.below(n), y = x, d = 1;
        auto f = [&](u64 v) { return addmod(mulmod(v, v, n), c, n); };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

static void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

std::vector<std::pair<u64, int>> factor_int(u64 n) {
    std::vector<u64> ps;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31})
        while (n % p == 0) ps.push_back(p), n /= p;
    factor_rec(n, ps);
    std::sort(ps.begin(), ps.end());
    std::vector<std::pair<u64, int>> out;
    for (u64 p : ps) {
        if (!out.empty() && out.back().first == p)
            out.back().second++;
        else
            out.push_back({p, 1});
    }
    return out;
}

std::vector<u64> divisors(u64 n) {
    std::vector<u64> out{1};
    for (auto [p, e] : factor_int(n)) {
        size_t sz = out.size();
        u64 pk = 1;
        for (int i = 1; i <= e; i++) {
            pk *= p;
            for (size_t j = 0; j < sz; j++) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

u64 tau(u64 n) {
    u64 t = 1;
    for (auto [p, e] : factor_int(n)) t *= (u64)(e + 1);
    return t;
}

u64 least_generator(u64 p) {
    if (!is_prime(p)) throw std::invalid_argument("least_generator: p not prime");
    if (p == 2) return 1;
    auto fac = factor_int(p - 1);
    for (u64 g = 2; g < p; g++) {
        bool ok = true;
        for (auto [q, e] : fac)
            if (powmod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw std::logic_error("least_generator: unreachable");
}

std::optional<std::pair<u64, u64>> sqrt_mod(u64 a, u64 p) {
    a %= p;
    if (a == 0) return std::make_pair(0ULL, 0ULL);
    if (legendre(a, p) != 1) return std::nullopt;
    u64 r;
    if (p % 4 == 3) {
        r = powmod(a, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks
        u64 q = p - 1;
        int s = 0;
        while (!(q & 1)) q >>= 1, s++;
        u64 z = 2;
        while (legendre(z, p) != -1) z++;
        u64 m = s, c = powmod(z, q, p), t = powmod(a, q, p), rr = powmod(a, (q + 1) / 2, p);
        while (t != 1) {
            u64 t2 = t;
            u64 i = 0;
            while (t2 != 1) t2 = mulmod(t2, t2, p), i++;
            u64 b = powmod(c, 1ULL << (m - i - 1), p);
            m = i;
            c = mulmod(b, b, p);
            t = mulmod(t, c, p);
            rr = mulmod(rr, b, p);
        }
        r = rr;
    }
    u64 r2 = p - r;
    return std::make_pair(std::min(r, r2), std::max(r, r2));
}

std::vector<u64> primes_in(u64 lo, u64 hi) {
    std::vector<u64> out;
    if (hi < 2) return out;
    lo = std::max<u64>(lo, 2);
    std::vector<bool> comp(hi - lo + 1, false);
    for (u64 p = 2; p * p <= hi; p++) {
        if (p > 2 && !(p & 1)) continue;
        bool pp = true;
        for (u64 q = 2; q * q <= p; q++)
            if (p % q == 0) {
                pp = false;
                break;
            }
        if (!pp) continue;
        u64 start = std::max(p * p, (lo + p - 1) / p * p);
        for (u64 m = start; m <= hi; m += p) comp[m - lo] = true;
    }
    for (u64 n = lo; n <= hi; n++)
        if (!comp[n - lo]) out.push_back(n);
    return out;
}

Fp2 Fp2Ctx::sqrt_base(u64 a) const {
    a %= p_;
    if (a == 0) return {0, 0};
    if (auto r = sqrt_mod(a, p_)) return {r->first, 0};
    // a = eps * square; sqrt = y*sqrt(eps)
    auto r = sqrt_mod(mulmod(a, invmod(eps_, p_), p_), p_);
    return {0, r->first};
}

} // namespace galrep
