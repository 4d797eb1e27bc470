#include "galrep/zpoly.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace galrep {

static void normalize(ZPoly& a) {
    while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

ZPoly z_poly(std::vector<mpz_class> coeffs) {
    ZPoly r{std::move(coeffs)};
    normalize(r);
    return r;
}
ZPoly z_const(const mpz_class& v) { return z_poly({v}); }
ZPoly z_x() { return z_poly({0, 1}); }

ZPoly z_add(const ZPoly& a, const ZPoly& b) {
    ZPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < a.c.size(); i++) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); i++) r.c[i] += b.c[i];
    normalize(r);
    return r;
}

ZPoly z_sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < a.c.size(); i++) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); i++) r.c[i] -= b.c[i];
    normalize(r);
    return r;
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    ZPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.c.size(); i++) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); j++) r.c[i + j] += a.c[i] * b.c[j];
    }
    normalize(r);
    return r;
}

ZPoly z_scale(const ZPoly& a, const mpz_class& s) {
    ZPoly r = a;
    for (auto& v : r.c) v *= s;
    normalize(r);
    return r;
}

ZPoly z_neg(const ZPoly& a) { return z_scale(a, -1); }

ZPoly z_derive(const ZPoly& a) {
    if (a.deg() < 1) return {};
    ZPoly r;
    r.c.resize(a.deg());
    for (int i = 1; i <= a.deg(); i++) r.c[i - 1] = a.c[i] * i;
    normalize(r);
    return r;
}

mpz_class z_eval(const ZPoly& a, const mpz_class& x) {
    mpz_class r = 0;
    for (int i = a.deg(); i >= 0; i--) r = r * x + a.c[i];
    return r;
}

ZPoly z_divexact(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("z_divexact: zero divisor");
    if (a.is_zero()) return {};
    ZPoly rem = a, q;
    q.c.assign(a.deg() - b.deg() + 1, mpz_class(0));
    for (int i = a.deg(); i >= b.deg(); i--) {
        if (rem.deg() < i) continue;
        mpz_class qi;
        mpz_divexact(qi.get_mpz_t(), rem.c[i].get_mpz_t(), b.lead().get_mpz_t());
        q.c[i - b.deg()] = qi;
        for (int j = 0; j <= b.deg(); j++) rem.c[i - b.deg() + j] -= qi * b.c[j];
        normalize(rem);
    }
    if (!rem.is_zero()) throw std::invalid_argument("z_divexact: not divisible");
    normalize(q);
    return q;
}

std::pair<ZPoly, ZPoly> z_pseudo_divmod(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("z_pseudo_divmod: zero divisor");
    ZPoly rem = a, q;
    if (a.deg() < b.deg()) return {q, rem};
    q.c.assign(a.deg() - b.deg() + 1, mpz_class(0));
    const mpz_class& lb = b.lead();
    for (int i = a.deg(); i >= b.deg(); i--) {
        for (auto& v : q.c) v *= lb;
        for (auto& v : rem.c) v *= lb;
        if (rem.deg() >= i) {
            mpz_class qi = rem.c[i] / lb;
            q.c[i - b.deg()] += qi;
            for (int j = 0; j <= b.deg(); j++) rem.c[i - b.deg() + j] -= qi * b.c[j];
        }
        normalize(rem);
    }
    normalize(q);
    return {q, rem};
}

bool z_divides(const ZPoly& b, const ZPoly& a) {
    if (b.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    if (b.deg() > a.deg()) return false;
    ZPoly rem = a;
    for (int i = a.deg(); i >= b.deg(); i--) {
        if (rem.deg() < i) continue;
        if (!mpz_divisible_p(rem.c[i].get_mpz_t(), b.lead().get_mpz_t())) return false;
        mpz_class qi;
        mpz_divexact(qi.get_mpz_t(), rem.c[i].get_mpz_t(), b.lead().get_mpz_t());
        for (int j = 0; j <= b.deg(); j++) rem.c[i - b.deg() + j] -= qi * b.c[j];
        normalize(rem);
    }
    return rem.is_zero();
}

mpz_class z_content(const ZPoly& a) {
    mpz_class g = 0;
    for (auto& v : a.c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly z_primitive(const ZPoly& a) {
    if (a.is_zero()) return a;
    mpz_class g = z_content(a);
    if (a.lead() < 0) g = -g;
    ZPoly r = a;
    for (auto& v : r.c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return r;
}

FpPoly z_mod_p(const ZPoly& a, u64 p) {
    std::vector<u64> c(a.c.size());
    for (size_t i = 0; i < a.c.size(); i++) {
        mpz_class m = a.c[i] % (long)p;  // p fits in long for our uses
        if (m < 0) m += (long)p;
        c[i] = m.get_ui();
    }
    return fp_poly(p, std::move(c));
}

mpz_class z_resultant(const ZPoly& a, const ZPoly& b) {
    int m = a.deg(), n = b.deg();
    if (m < 0 || n < 0) return 0;
    if (m == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), a.c[0].get_mpz_t(), n);
        return r;
    }
    if (n == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), b.c[0].get_mpz_t(), m);
        return r;
    }
    int N = m + n;
    std::vector<std::vector<mpz_class>> M(N, std::vector<mpz_class>(N, mpz_class(0)));
    for (int i = 0; i < n; i++)
        for (int j = 0; j <= m; j++) M[i][i + j] = a.c[m - j];
    for (int i = 0; i < m; i++)
        for (int j = 0; j <= n; j++) M[n + i][i + j] = b.c[n - j];
    // Bareiss fraction-free elimination
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < N - 1; k++) {
        if (M[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < N; i++)
                if (M[i][k] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            std::swap(M[k], M[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; i++)
            for (int j = k + 1; j < N; j++) {
                mpz_class t = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                mpz_divexact(M[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = M[k][k];
    }
    return sign > 0 ? M[N - 1][N - 1] : mpz_class(-M[N - 1][N - 1]);
}

// ---------- Hensel machinery ----------

namespace {

struct ModCtx {
    mpz_class m;
    mpz_class red(const mpz_class& v) const {
        mpz_class r = v % m;
        if (r < 0) r += m;
        return r;
    }
    ZPoly red(const ZPoly& a) const {
        ZPoly r = a;
        for (auto& v : r.c) v = red(v);
        while (!r.c.empty() && r.c.back() == 0) r.c.pop_back();
        return r;
    }
    ZPoly mul(const ZPoly& a, const ZPoly& b) const { return red(z_mul(a, b)); }
    ZPoly add(const ZPoly& a, const ZPoly& b) const { return red(z_add(a, b)); }
    ZPoly sub(const ZPoly& a, const ZPoly& b) const { return red(z_sub(a, b)); }
    // divmod by monic b
    std::pair<ZPoly, ZPoly> divmod(const ZPoly& a, const ZPoly& b) const {
        ZPoly rem = red(a), q;
        if (rem.deg() < b.deg()) return {q, rem};
        q.c.assign(rem.deg() - b.deg() + 1, mpz_class(0));
        for (int i = rem.deg(); i >= b.deg(); i--) {
            if (rem.deg() < i) continue;
            mpz_class qi = rem.c[i];
            q.c[i - b.deg()] = qi;
            for (int j = 0; j <= b.deg(); j++)
                rem.c[i - b.deg() + j] = red(rem.c[i - b.deg() + j] - qi * b.c[j]);
            while (!rem.c.empty() && rem.c.back() == 0) rem.c.pop_back();
        }
        while (!q.c.empty() && q.c.back() == 0) q.c.pop_back();
        return {q, red(rem)};
    }
};

ZPoly from_fp(const FpPoly& a) {
    ZPoly r;
    r.c.reserve(a.c.size());
    for (u64 v : a.c) r.c.emplace_back((unsigned long)v);
    return r;
}

// symmetric representative in (-m/2, m/2]
ZPoly symmetric(const ZPoly& a, const mpz_class& m) {
    ZPoly r = a;
    mpz_class half = m / 2;
    for (auto& v : r.c) {
        v %= m;
        if (v < 0) v += m;
        if (v > half) v -= m;
    }
    while (!r.c.empty() && r.c.back() == 0) r.c.pop_back();
    return r;
}

struct HenselNode {
    ZPoly f;        // product of the leaf factors below (times lc at root), mod m
    ZPoly g, h;     // f = g*h mod m (children products), h monic
    ZPoly s, t;     // s*g + t*h = 1 mod m
    int lo = 0, hi = 0;  // leaf range
    int left = -1, right = -1;
};

// one quadratic lift step of node products from mod m to mod m^2
void lift_node(std::vector<HenselNode>& tree, int idx, const mpz_class& m2) {
    HenselNode& nd = tree[idx];
    if (nd.left < 0) return;
    ModCtx M{m2};
    ZPoly e = M.sub(nd.f, M.mul(nd.g, nd.h));
    auto [q, r] = M.divmod(M.mul(nd.s, e), nd.h);
    ZPoly g1 = M.add(nd.g, M.add(M.mul(nd.t, e), M.mul(q, nd.g)));
    ZPoly h1 = M.add(nd.h, r);
    ZPoly b = M.sub(M.add(M.mul(nd.s, g1), M.mul(nd.t, h1)), z_const(1));
    auto [c, d] = M.divmod(M.mul(nd.s, b), h1);
    ZPoly s1 = M.sub(nd.s, d);
    ZPoly t1 = M.sub(M.sub(nd.t, M.mul(nd.t, b)), M.mul(c, g1));
    nd.g = g1;
    nd.h = h1;
    nd.s = s1;
    nd.t = t1;
    tree[nd.left].f = g1;
    tree[nd.right].f = h1;
    lift_node(tree, nd.left, m2);
    lift_node(tree, nd.right, m2);
}

// extended Euclid over F_p: s*a + t*b = 1
void fp_bezout(const FpPoly& a, const FpPoly& b, FpPoly& s, FpPoly& t) {
    u64 p = a.p;
    FpPoly r0 = a, r1 = b;
    FpPoly s0 = fp_const(p, 1), s1 = fp_zero(p);
    FpPoly t0 = fp_zero(p), t1 = fp_const(p, 1);
    while (!r1.is_zero()) {
        auto [q, r] = fp_divmod(r0, r1);
        FpPoly ns = fp_sub(s0, fp_mul(q, s1)), nt = fp_sub(t0, fp_mul(q, t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = ns;
        t0 = t1;
        t1 = nt;
    }
    if (r0.deg() != 0) throw std::logic_error("fp_bezout: inputs not coprime");
    u64 inv = invmod(r0.c[0], p);
    s = fp_scale(s0, inv);
    t = fp_scale(t0, inv);
}

int build_tree(std::vector<HenselNode>& tree, const std::vector<FpPoly>& leaves, int lo, int hi,
               u64 p) {
    int idx = (int)tree.size();
    tree.push_back({});
    tree[idx].lo = lo;
    tree[idx].hi = hi;
    if (hi - lo == 1) {
        tree[idx].f = from_fp(leaves[lo]);
        return idx;
    }
    int mid = (lo + hi) / 2;
    int L = build_tree(tree, leaves, lo, mid, p);
    int R = build_tree(tree, leaves, mid, hi, p);
    tree[idx].left = L;
    tree[idx].right = R;
    tree[idx].f = z_mul(tree[L].f, tree[R].f);
    ModCtx M{mpz_class((unsigned long)p)};
    tree[idx].f = M.red(tree[idx].f);
    return idx;
}

// fill g,h,s,t mod p at every internal node
void init_bezout(std::vector<HenselNode>& tree, int idx, u64 p) {
    HenselNode& nd = tree[idx];
    if (nd.left < 0) return;
    nd.g = tree[nd.left].f;
    nd.h = tree[nd.right].f;
    FpPoly s, t;
    fp_bezout(z_mod_p(nd.g, p), z_mod_p(nd.h, p), s, t);
    nd.s = from_fp(s);
    nd.t = from_fp(t);
    init_bezout(tree, nd.left, p);
    init_bezout(tree, nd.right, p);
}

struct LiftedFactors {
    mpz_class P;                 // final modulus
    std::vector<ZPoly> factors;  // monic mod P
};

// factor mod a good prime and Hensel-lift so that P exceeds 2*bound
LiftedFactors lift_factorization(const ZPoly& f, Rng& rng, const mpz_class& bound) {
    // choose an odd prime keeping f squarefree, minimizing the factor count
    u64 best_p = 0;
    std::vector<std::pair<FpPoly, int>> best_fac;
    int tried = 0;
    for (u64 p = 16411; tried < 10; p++) {
        if (!is_prime(p)) continue;
        if (mpz_divisible_ui_p(f.lead().get_mpz_t(), (unsigned long)p)) continue;
        FpPoly fp = z_mod_p(f, p);
        if (fp.deg() != f.deg()) continue;
        if (fp_gcd(fp, fp_derive(fp)).deg() != 0) continue;
        tried++;
        Rng r2 = rng.derive(p);
        auto fac = fp_factor(fp, r2);
        if (best_p == 0 || fac.size() < best_fac.size()) {
            best_p = p;
            best_fac = fac;
            if (fac.size() == 1) break;
        }
    }
    if (best_p == 0) throw std::invalid_argument("hensel_factor_z: no good prime (input not squarefree?)");

    std::vector<FpPoly> leaves;
    for (auto& [g, m] : best_fac) leaves.push_back(g);

    LiftedFactors out;
    if (leaves.size() == 1) {
        out.P = (unsigned long)best_p;
        out.factors = {from_fp(leaves[0])};
        return out;
    }

    // fold lc(f) into the first leaf so every node satisfies f = g*h exactly
    mpz_class m((unsigned long)best_p);
    {
        mpz_class lcm = f.lead() % (long)best_p;
        if (lcm < 0) lcm += (long)best_p;
        leaves[0] = fp_scale(leaves[0], lcm.get_ui());
    }
    std::vector<HenselNode> tree;
    int root = build_tree(tree, leaves, 0, (int)leaves.size(), best_p);
    init_bezout(tree, root, best_p);
    while (m <= 2 * bound) {
        mpz_class m2 = m * m;
        ModCtx M{m2};
        tree[root].f = M.red(f);
        lift_node(tree, root, m2);
        m = m2;
    }
    out.P = m;
    out.factors.resize(leaves.size());
    for (auto& nd : tree)
        if (nd.left < 0 && nd.hi - nd.lo == 1) out.factors[nd.lo] = nd.f;
    // normalize every leaf to the monic lift
    {
        ModCtx M{m};
        for (auto& g : out.factors) {
            if (!(g.lead() == 1)) {
                mpz_class inv;
                mpz_invert(inv.get_mpz_t(), M.red(g.lead()).get_mpz_t(), m.get_mpz_t());
                g = M.mul(z_const(inv), g);
            }
        }
    }
    return out;
}

mpz_class factor_coeff_bound(const ZPoly& f) {
    mpz_class H = 0;
    for (auto& v : f.c) {
        mpz_class a = abs(v);
        if (a > H) H = a;
    }
    mpz_class B = H * abs(f.lead());
    mpz_ui_pow_ui(H.get_mpz_t(), 2, f.deg() + 2);
    return B * H * (f.deg() + 1);
}

} // namespace

std::vector<ZPoly> hensel_factor_z(const ZPoly& f0, Rng& rng, int degree_cap) {
    ZPoly f = z_primitive(f0);
    if (f.deg() > degree_cap) throw std::invalid_argument("hensel_factor_z: degree exceeds cap");
    std::vector<ZPoly> out;
    if (f.deg() <= 0) return out;
    if (f.deg() == 1) {
        out.push_back(f);
        return out;
    }
    auto lifted = lift_factorization(f, rng, factor_coeff_bound(f));
    if (lifted.factors.size() == 1) {
        out.push_back(f);
        return out;
    }
    ModCtx M{lifted.P};
    std::vector<ZPoly> pool = lifted.factors;
    long budget = 4000000;
    // subsets of the pool by ascending cardinality; complement rule keeps c <= |pool|/2
    while (!pool.empty()) {
        int r = (int)pool.size();
        bool found = false;
        for (int c = 1; c <= r / 2 && !found; c++) {
            std::vector<int> idx(c);
            for (int i = 0; i < c; i++) idx[i] = i;
            for (;;) {
                if (--budget < 0) throw std::runtime_error("hensel_factor_z: recombination budget exhausted");
                ZPoly cand = z_const(M.red(f.lead()));
                for (int i : idx) cand = M.mul(cand, pool[i]);
                cand = z_primitive(symmetric(cand, lifted.P));
                if (z_divides(cand, f)) {
                    out.push_back(cand);
                    f = z_divexact(f, cand);
                    f = z_primitive(f);
                    std::vector<ZPoly> np;
                    for (int i = 0, k = 0; i < r; i++) {
                        if (k < c && idx[k] == i) {
                            k++;
                            continue;
                        }
                        np.push_back(pool[i]);
                    }
                    pool = std::move(np);
                    found = true;
                    break;
                }
                // next combination
                int i = c - 1;
                while (i >= 0 && idx[i] == r - c + i) i--;
                if (i < 0) break;
                idx[i]++;
                for (int j = i + 1; j < c; j++) idx[j] = idx[j - 1] + 1;
            }
        }
        if (!found) {
            // remainder is irreducible
            out.push_back(f);
            pool.clear();
        }
    }
    std::sort(out.begin(), out.end(), z_less);
    return out;
}

int z_min_factor_degree(const ZPoly& f0, Rng& rng, int degree_cap) {
    ZPoly f = z_primitive(f0);
    if (f.deg() > degree_cap) throw std::invalid_argument("z_min_factor_degree: degree exceeds cap");
    if (f.deg() <= 1) return f.deg();
    auto lifted = lift_factorization(f, rng, factor_coeff_bound(f));
    int r = (int)lifted.factors.size();
    if (r == 1) return f.deg();
    ModCtx M{lifted.P};
    // enumerate subsets by total degree, ascending; the first divisor found is
    // an irreducible factor of minimal degree
    std::vector<int> degs(r);
    for (int i = 0; i < r; i++) degs[i] = lifted.factors[i].deg();
    long budget = 4000000;
    for (int d = 1; d < f.deg(); d++) {
        // DFS over index subsets with degree sum exactly d
        std::vector<int> chosen;
        ZPoly found;
        std::function<bool(int, int)> dfs = [&](int start, int need) -> bool {
            if (need == 0) {
                if (--budget < 0) throw std::runtime_error("z_min_factor_degree: budget exhausted");
                ZPoly cand = z_const(M.red(f.lead()));
                for (int i : chosen) cand = M.mul(cand, lifted.factors[i]);
                cand = z_primitive(symmetric(cand, lifted.P));
                if (z_divides(cand, f)) {
                    found = cand;
                    return true;
                }
                return false;
            }
            for (int i = start; i < r; i++) {
                if (degs[i] > need) continue;
                chosen.push_back(i);
                if (dfs(i + 1, need - degs[i])) return true;
                chosen.pop_back();
            }
            return false;
        };
        if (dfs(0, d)) return d;
    }
    return f.deg();
}

bool z_less(const ZPoly& a, const ZPoly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    for (size_t i = 0; i < a.c.size(); i++) {
        int c = cmp(a.c[i], b.c[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

} // namespace galrep
