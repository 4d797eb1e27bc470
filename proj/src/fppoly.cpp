#include "galrep/fppoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace galrep {

static void normalize(FpPoly& a) {
    while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

FpPoly fp_poly(u64 p, std::vector<u64> coeffs) {
    FpPoly r{p, std::move(coeffs)};
    for (auto& v : r.c) v %= p;
    normalize(r);
    return r;
}

FpPoly fp_zero(u64 p) { return {p, {}}; }
FpPoly fp_const(u64 p, u64 v) { return fp_poly(p, {v}); }
FpPoly fp_x(u64 p) { return fp_poly(p, {0, 1}); }

FpPoly fp_add(const FpPoly& a, const FpPoly& b) {
    FpPoly r{a.p, {}};
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); i++) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); i++) r.c[i] = addmod(r.c[i], b.c[i], a.p);
    normalize(r);
    return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b) {
    FpPoly r{a.p, {}};
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); i++) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); i++) r.c[i] = submod(r.c[i], b.c[i], a.p);
    normalize(r);
    return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() || b.is_zero()) return fp_zero(a.p);
    u64 p = a.p;
    std::vector<u64> r(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); i++) {
        if (!a.c[i]) continue;
        for (size_t j = 0; j < b.c.size(); j++)
            r[i + j] = addmod(r[i + j], mulmod(a.c[i], b.c[j], p), p);
    }
    FpPoly out{p, std::move(r)};
    normalize(out);
    return out;
}

FpPoly fp_scale(const FpPoly& a, u64 s) {
    FpPoly r = a;
    for (auto& v : r.c) v = mulmod(v, s % a.p, a.p);
    normalize(r);
    return r;
}

FpPoly fp_monic(const FpPoly& a) {
    if (a.is_zero() || a.lead() == 1) return a;
    return fp_scale(a, invmod(a.lead(), a.p));
}

std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("fp_divmod: division by zero");
    u64 p = a.p;
    if (a.deg() < b.deg()) return {fp_zero(p), a};
    std::vector<u64> rem = a.c, q(a.deg() - b.deg() + 1, 0);
    u64 linv = invmod(b.lead(), p);
    for (int i = a.deg(); i >= b.deg(); i--) {
        u64 coef = mulmod(rem[i], linv, p);
        q[i - b.deg()] = coef;
        if (!coef) continue;
        for (int j = 0; j <= b.deg(); j++)
            rem[i - b.deg() + j] = submod(rem[i - b.deg() + j], mulmod(coef, b.c[j], p), p);
    }
    FpPoly Q{p, std::move(q)}, R{p, std::move(rem)};
    normalize(Q);
    normalize(R);
    return {Q, R};
}

FpPoly fp_mod(const FpPoly& a, const FpPoly& b) { return fp_divmod(a, b).second; }

FpPoly fp_gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = fp_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(a);
}

FpPoly fp_derive(const FpPoly& a) {
    if (a.deg() < 1) return fp_zero(a.p);
    std::vector<u64> r(a.deg(), 0);
    for (int i = 1; i <= a.deg(); i++) r[i - 1] = mulmod(a.c[i], (u64)i % a.p, a.p);
    FpPoly out{a.p, std::move(r)};
    normalize(out);
    return out;
}

u64 fp_eval(const FpPoly& a, u64 x) {
    u64 r = 0;
    for (int i = a.deg(); i >= 0; i--) r = addmod(mulmod(r, x, a.p), a.c[i], a.p);
    return r;
}

FpPoly fp_powmod(const FpPoly& a, u64 e, const FpPoly& f) {
    FpPoly r = fp_const(a.p, 1), b = fp_mod(a, f);
    while (e) {
        if (e & 1) r = fp_mod(fp_mul(r, b), f);
        b = fp_mod(fp_mul(b, b), f);
        e >>= 1;
    }
    return r;
}

FpPoly fp_frobenius(const FpPoly& f, int k) {
    FpPoly r = fp_powmod(fp_x(f.p), f.p, f);
    for (int i = 1; i < k; i++) r = fp_powmod(r, f.p, f);
    return r;
}

bool fp_irreducible(const FpPoly& f) {
    int n = f.deg();
    if (n <= 0) return false;
    if (n == 1) return true;
    // x^(p^n) == x mod f, and gcd(x^(p^(n/q)) - x, f) = 1 for prime q | n
    FpPoly xq = fp_frobenius(f, n);
    if (!(xq == fp_mod(fp_x(f.p), f))) return false;
    for (auto [q, e] : factor_int((u64)n)) {
        FpPoly xr = fp_frobenius(f, n / (int)q);
        if (fp_gcd(fp_sub(xr, fp_x(f.p)), f).deg() > 0) return false;
    }
    return true;
}

bool fp_less(const FpPoly& a, const FpPoly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    return a.c < b.c;
}

// equal-degree splitting of a product of distinct irreducibles of degree d
static void edf(const FpPoly& f, int d, Rng& rng, std::vector<FpPoly>& out) {
    int n = f.deg();
    if (n == d) {
        out.push_back(fp_monic(f));
        return;
    }
    u64 p = f.p;
    for (;;) {
        std::vector<u64> rc(n);
        for (auto& v : rc) v = rng.below(p);
        FpPoly a = fp_poly(p, std::move(rc));
        if (a.deg() < 1) continue;
        FpPoly g = fp_gcd(a, f);
        if (g.deg() > 0 && g.deg() < n) {
            edf(g, d, rng, out);
            edf(fp_divmod(f, g).first, d, rng, out);
            return;
        }
        FpPoly b;
        if (p == 2) {
            // trace map sum a^(2^i)
            b = a;
            FpPoly t = a;
            for (int i = 1; i < d; i++) {
                t = fp_mod(fp_mul(t, t), f);
                b = fp_add(b, t);
            }
        } else {
            // a^((p^d-1)/2) = (a^(1+p+...+p^(d-1)))^((p-1)/2), keeping exponents word-sized
            FpPoly c = a;
            for (int i = 1; i < d; i++) c = fp_mod(fp_mul(fp_powmod(c, p, f), a), f);
            b = fp_sub(fp_powmod(c, (p - 1) / 2, f), fp_const(p, 1));
        }
        g = fp_gcd(b, f);
        if (g.deg() > 0 && g.deg() < n) {
            edf(g, d, rng, out);
            edf(fp_divmod(f, g).first, d, rng, out);
            return;
        }
    }
}

std::vector<std::pair<FpPoly, int>> fp_factor(const FpPoly& f, Rng& rng) {
    if (f.is_zero()) throw std::invalid_argument("fp_factor: zero polynomial");
    u64 p = f.p;
    std::vector<std::pair<FpPoly, int>> out;
    FpPoly g = fp_monic(f);
    if (g.deg() == 0) return out;

    // squarefree decomposition via repeated gcd with derivative
    int mult = 1;
    std::vector<std::pair<FpPoly, int>> sqfree;  // (squarefree part, multiplicity)
    std::vector<FpPoly> stack{g};
    std::vector<int> mstack{1};
    while (!stack.empty()) {
        FpPoly h = stack.back();
        int m = mstack.back();
        stack.pop_back();
        mstack.pop_back();
        if (h.deg() == 0) continue;
        FpPoly d = fp_derive(h);
        if (d.is_zero()) {
            // h = w(x)^p; p-th roots of coefficients are the coefficients (c^p = c in F_p)
            std::vector<u64> w(h.deg() / (int)p + 1);
            for (size_t i = 0; i < w.size(); i++) w[i] = h.c[i * p];
            stack.push_back(fp_poly(p, std::move(w)));
            mstack.push_back(m * (int)p);
            continue;
        }
        FpPoly c = fp_gcd(h, d);
        FpPoly w = fp_divmod(h, c).first;  // product of squarefree factors
        int i = m;
        while (w.deg() > 0) {
            FpPoly y = fp_gcd(w, c);
            FpPoly z = fp_divmod(w, y).first;  // factors with exact multiplicity i
            if (z.deg() > 0) sqfree.push_back({z, i});
            w = y;
            c = fp_divmod(c, y).first;
            i += m;
        }
        if (c.deg() > 0) {
            stack.push_back(c);
            mstack.push_back(m);
        }
    }
    (void)mult;

    for (auto& [sf, m] : sqfree) {
        // distinct-degree then equal-degree
        FpPoly h = fp_monic(sf);
        FpPoly xp = fp_x(p);
        FpPoly frob = xp;
        int d = 0;
        while (h.deg() > 0) {
            d++;
            if (2 * d > h.deg()) {
                out.push_back({h, m});
                break;
            }
            frob = fp_powmod(frob, p, h);
            FpPoly g2 = fp_gcd(fp_sub(frob, xp), h);
            if (g2.deg() > 0) {
                std::vector<FpPoly> pieces;
                edf(g2, d, rng, pieces);
                for (auto& q : pieces) out.push_back({q, m});
                h = fp_divmod(h, g2).first;
                frob = fp_mod(frob, h);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (!(a.first == b.first)) return fp_less(a.first, b.first);
        return a.second < b.second;
    });
    return out;
}

std::vector<u64> fp_roots(const FpPoly& f, Rng& rng) {
    std::vector<u64> out;
    if (f.deg() < 1) return out;
    // gcd with x^p - x isolates the linear part
    FpPoly xp = fp_powmod(fp_x(f.p), f.p, f);
    FpPoly lin = fp_gcd(fp_sub(xp, fp_x(f.p)), f);
    if (lin.deg() < 1) return out;
    auto fac = fp_factor(lin, rng);
    for (auto& [g, m] : fac)
        if (g.deg() == 1) out.push_back(submod(0, g.c[0], f.p));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace galrep
