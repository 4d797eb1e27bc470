#include "galrep/fq.hpp"

#include <stdexcept>

namespace galrep {

static FpPoly find_irreducible(u64 p, int k) {
    if (k == 1) return fp_x(p);
    // scan a fixed sequence: t^k + a1*t + a0, then sparse trinomials
    for (u64 a0 = 1; a0 < p; a0++)
        for (u64 a1 = 0; a1 < p; a1++) {
            std::vector<u64> c(k + 1, 0);
            c[0] = a0;
            c[1] = a1;
            c[k] = 1;
            FpPoly f = fp_poly(p, std::move(c));
            if (fp_irreducible(f)) return f;
        }
    // with a middle term as a fallback (p=2, some k need it)
    for (int mid = 2; mid < k; mid++)
        for (u64 a0 = 1; a0 < p; a0++)
            for (u64 am = 1; am < p; am++) {
                std::vector<u64> c(k + 1, 0);
                c[0] = a0;
                c[mid] = am;
                c[k] = 1;
                FpPoly f = fp_poly(p, std::move(c));
                if (fp_irreducible(f)) return f;
            }
    throw std::runtime_error("find_irreducible: no sparse modulus found");
}

FqCtx::FqCtx(u64 p, int k) : p_(p), k_(k), mod_(find_irreducible(p, k)) {
    frob_x_ = fp_powmod(fp_x(p_), p_, mod_);
}

Fq FqCtx::from_base(u64 v) const {
    Fq a = zero();
    a.c[0] = v % p_;
    return a;
}

Fq FqCtx::gen() const {
    Fq a = zero();
    if (k_ == 1)
        a.c[0] = 0;
    else
        a.c[1] = 1;
    return a;
}

bool FqCtx::is_zero(const Fq& a) const {
    for (u64 v : a.c)
        if (v) return false;
    return true;
}

Fq FqCtx::add(const Fq& a, const Fq& b) const {
    Fq r = a;
    for (int i = 0; i < k_; i++) r.c[i] = addmod(r.c[i], b.c[i], p_);
    return r;
}

Fq FqCtx::sub(const Fq& a, const Fq& b) const {
    Fq r = a;
    for (int i = 0; i < k_; i++) r.c[i] = submod(r.c[i], b.c[i], p_);
    return r;
}

Fq FqCtx::neg(const Fq& a) const {
    Fq r = a;
    for (int i = 0; i < k_; i++) r.c[i] = negmod(r.c[i], p_);
    return r;
}

Fq FqCtx::mul(const Fq& a, const Fq& b) const {
    if (k_ == 1) return {{mulmod(a.c[0], b.c[0], p_)}};
    std::vector<u64> prod(2 * k_ - 1, 0);
    for (int i = 0; i < k_; i++) {
        if (!a.c[i]) continue;
        for (int j = 0; j < k_; j++)
            prod[i + j] = addmod(prod[i + j], mulmod(a.c[i], b.c[j], p_), p_);
    }
    // reduce by the monic modulus
    for (int i = 2 * k_ - 2; i >= k_; i--) {
        u64 coef = prod[i];
        if (!coef) continue;
        prod[i] = 0;
        for (int j = 0; j < k_; j++)
            prod[i - k_ + j] = submod(prod[i - k_ + j], mulmod(coef, mod_.c[j], p_), p_);
    }
    prod.resize(k_);
    return {std::move(prod)};
}

Fq FqCtx::mulbase(const Fq& a, u64 s) const {
    Fq r = a;
    s %= p_;
    for (int i = 0; i < k_; i++) r.c[i] = mulmod(r.c[i], s, p_);
    return r;
}

Fq FqCtx::inv(const Fq& a) const {
    FpPoly ap = fp_poly(p_, a.c);
    if (ap.is_zero()) throw std::invalid_argument("FqCtx::inv of zero");
    // extended Euclid against the modulus
    FpPoly r0 = mod_, r1 = ap;
    FpPoly t0 = fp_zero(p_), t1 = fp_const(p_, 1);
    while (!r1.is_zero()) {
        auto [q, r] = fp_divmod(r0, r1);
        FpPoly nt = fp_sub(t0, fp_mul(q, t1));
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = nt;
    }
    if (r0.deg() != 0) throw std::logic_error("FqCtx::inv: modulus not irreducible?");
    FpPoly t = fp_scale(t0, invmod(r0.c[0], p_));
    Fq out = zero();
    for (size_t i = 0; i < t.c.size(); i++) out.c[i] = t.c[i];
    return out;
}

Fq FqCtx::pow(const Fq& a, const mpz_class& e) const {
    if (e < 0) return pow(inv(a), -e);
    Fq r = one(), b = a;
    mpz_class n = e;
    size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (size_t i = 0; i < bits; i++) {
        if (mpz_tstbit(n.get_mpz_t(), i)) r = mul(r, b);
        b = mul(b, b);
    }
    return r;
}

Fq FqCtx::frobenius(const Fq& a) const {
    // a(t)^p = a(t^p) by linearity of Frobenius over F_p
    FpPoly r = fp_zero(p_);
    FpPoly xp = fp_const(p_, 1);
    for (int i = 0; i < k_; i++) {
        if (a.c[i]) r = fp_add(r, fp_scale(xp, a.c[i]));
        if (i + 1 < k_) xp = fp_mod(fp_mul(xp, frob_x_), mod_);
    }
    Fq out = zero();
    for (size_t i = 0; i < r.c.size(); i++) out.c[i] = r.c[i];
    return out;
}

mpz_class FqCtx::q() const {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), (unsigned long)p_, (unsigned long)k_);
    return r;
}

bool FqCtx::is_square(const Fq& a) const {
    if (is_zero(a)) return true;
    mpz_class e = (q() - 1) / 2;
    return pow(a, e) == one();
}

std::optional<Fq> FqCtx::sqrt(const Fq& a, Rng& rng) const {
    if (is_zero(a)) return a;
    mpz_class Q = q();
    if (!is_square(a)) return std::nullopt;
    if (mpz_tstbit(Q.get_mpz_t(), 1)) {  // q = 3 mod 4
        return pow(a, (Q + 1) / 4);
    }
    // Tonelli-Shanks over F_q
    mpz_class t = Q - 1;
    unsigned long s = mpz_scan1(t.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(t.get_mpz_t(), t.get_mpz_t(), s);
    Fq z;
    do {
        z = random(rng);
    } while (is_zero(z) || is_square(z));
    Fq c = pow(z, t);
    Fq x = pow(a, (t + 1) / 2);
    Fq b = pow(a, t);
    unsigned long m = s;
    while (!(b == one())) {
        Fq b2 = b;
        unsigned long i = 0;
        while (!(b2 == one())) b2 = mul(b2, b2), i++;
        Fq e = c;
        for (unsigned long j = 0; j + i + 1 < m; j++) e = mul(e, e);
        m = i;
        c = mul(e, e);
        b = mul(b, c);
        x = mul(x, e);
    }
    return x;
}

Fq FqCtx::random(Rng& rng) const {
    Fq a = zero();
    for (int i = 0; i < k_; i++) a.c[i] = rng.below(p_);
    return a;
}

} // namespace galrep
