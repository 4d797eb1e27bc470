#include "galrep/gl2.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace galrep {

Gl2Ctx::Gl2Ctx(u64 ell) : l_(ell) {
    if (!is_prime(ell) || ell > 251) throw std::invalid_argument("Gl2Ctx: level must be a prime < 256");
    r_ = ell == 2 ? 1 : least_generator(ell);
    div_l1_ = divisors(ell - 1);
    div_l21_ = divisors(ell * ell - 1);
    if (ell == 2) {
        cns_gen_ = {1, 1, 1, 0};  // order 3, kernel of sign: <[[1,1],[1,0]]>
        return;
    }
    // projective order table over C_s: u((1,r^e)) with |pi| = (l-1)/gcd(e,l-1)
    for (u64 e = 1; e <= l_ - 1; e++) {
        u64 x = powmod(r_, e, l_);
        u64 t = addmod(1, x, l_);
        u64 u = mulmod(mulmod(t, t, l_), invmod(x, l_), l_);
        u64 ord = (l_ - 1) / std::gcd(e, l_ - 1);
        auto it = proj_table_.find(u);
        if (it == proj_table_.end())
            proj_table_[u] = ord;
        else if (it->second != ord)
            throw std::logic_error("proj table collision (split)");
    }
    // and over C_ns via a generator of F_{l^2}^x
    Fp2Ctx F(l_);
    Fp2 g{};
    auto fac = factor_int(l_ * l_ - 1);
    for (u64 x = 0; x < l_ && g == Fp2{}; x++)
        for (u64 y = 1; y < l_; y++) {
            Fp2 cand{x, y};
            bool gen = true;
            for (auto [q, e] : fac)
                if (F.pow(cand, (l_ * l_ - 1) / q) == F.make(1)) {
                    gen = false;
                    break;
                }
            if (gen) {
                g = cand;
                break;
            }
        }
    cns_gen_ = {g.x, mulmod(r_, g.y, l_), g.y, g.x};
    Fp2 h = g;
    for (u64 e = 1; e <= l_ + 1; e++) {
        // u(h) for h = g^e; trace 2x, norm = det
        u64 t = F.trace(h);
        u64 n = F.norm(h);
        u64 u = mulmod(mulmod(t, t, l_), invmod(n, l_), l_);
        u64 ord = (l_ + 1) / std::gcd(e, l_ + 1);
        auto it = proj_table_.find(u);
        if (it == proj_table_.end())
            proj_table_[u] = ord;
        else if (it->second != ord)
            throw std::logic_error("proj table collision (nonsplit)");
        h = F.mul(h, g);
    }
}

Mat Gl2Ctx::mul(const Mat& x, const Mat& y) const {
    u64 l = l_;
    return {addmod(mulmod(x.a, y.a, l), mulmod(x.b, y.c, l), l),
            addmod(mulmod(x.a, y.b, l), mulmod(x.b, y.d, l), l),
            addmod(mulmod(x.c, y.a, l), mulmod(x.d, y.c, l), l),
            addmod(mulmod(x.c, y.b, l), mulmod(x.d, y.d, l), l)};
}

Mat Gl2Ctx::inv(const Mat& x) const {
    u64 dinv = invmod(det(x), l_);
    return {mulmod(x.d, dinv, l_), mulmod(negmod(x.b, l_), dinv, l_),
            mulmod(negmod(x.c, l_), dinv, l_), mulmod(x.a, dinv, l_)};
}

Mat Gl2Ctx::pow(Mat x, u64 e) const {
    Mat r = I();
    while (e) {
        if (e & 1) r = mul(r, x);
        x = mul(x, x);
        e >>= 1;
    }
    return r;
}

u64 Gl2Ctx::det(const Mat& x) const {
    return submod(mulmod(x.a, x.d, l_), mulmod(x.b, x.c, l_), l_);
}

u64 Gl2Ctx::tr(const Mat& x) const { return addmod(x.a, x.d, l_); }

u64 Gl2Ctx::mult_order(u64 x) const {
    x %= l_;
    u64 ord = 1, y = x;
    while (y != 1) y = mulmod(y, x, l_), ord++;
    return ord;
}

ElementInvariants Gl2Ctx::invariants(const Mat& g) const {
    ElementInvariants iv;
    iv.det = det(g);
    iv.tr = tr(g);
    if (iv.det == 0) throw std::invalid_argument("invariants: singular matrix");
    iv.disc = submod(mulmod(iv.tr, iv.tr, l_), mulmod(4 % l_, iv.det, l_), l_);
    iv.chi = l_ == 2 ? 0 : (int)legendre(iv.disc, l_);
    iv.u = mulmod(mulmod(iv.tr, iv.tr, l_), invmod(iv.det, l_), l_);
    if (g == I())
        iv.dim1 = 2;
    else if (submod(addmod(1, iv.det, l_), iv.tr, l_) == 0)
        iv.dim1 = 1;
    else
        iv.dim1 = 0;
    iv.proj_order = proj_order(g);
    return iv;
}

u64 Gl2Ctx::proj_order_semisimple(u64 dt, u64 t) const {
    u64 u = mulmod(mulmod(t, t, l_), invmod(dt, l_), l_);
    auto it = proj_table_.find(u);
    if (it == proj_table_.end()) throw std::logic_error("proj_order: u value not in table");
    return it->second;
}

u64 Gl2Ctx::proj_order(const Mat& g) const {
    if (is_scalar(g)) return 1;
    if (l_ == 2) {
        // GL_2(2) = S_3: non-identity elements have order 2 or 3
        Mat g2 = mul(g, g);
        return g2 == I() ? 2 : 3;
    }
    u64 dt = det(g), t = tr(g);
    u64 disc = submod(mulmod(t, t, l_), mulmod(4, dt, l_), l_);
    if (disc == 0) return l_;  // non-scalar, repeated eigenvalue: order divisible by l
    return proj_order_semisimple(dt, t);
}

ConjKind Gl2Ctx::conj_kind(const Mat& g) const {
    if (is_scalar(g)) return ConjKind::Scalar;
    ElementInvariants iv = invariants(g);
    if (iv.disc == 0) return ConjKind::NonSemisimple;
    return iv.chi > 0 ? ConjKind::Split : ConjKind::NonSplit;
}

ConjClassRep Gl2Ctx::conj_class_of(const Mat& g) const {
    u64 l = l_;
    ConjClassRep r;
    r.kind = conj_kind(g);
    switch (r.kind) {
        case ConjKind::Scalar:
            r.rep = g;
            r.size = 1;
            break;
        case ConjKind::NonSemisimple: {
            // x determined by tr = 2x (l odd); for l=2, x = 1
            u64 x = l == 2 ? 1 : mulmod(tr(g), invmod(2, l), l);
            r.rep = {x, 1, 0, x};
            r.size = l * l - 1;
            break;
        }
        case ConjKind::Split: {
            u64 t = tr(g), d = det(g);
            u64 disc = submod(mulmod(t, t, l), mulmod(4, d, l), l);
            auto s = sqrt_mod(disc, l);
            u64 x = mulmod(submod(t, s->second, l), invmod(2, l), l);
            u64 y = mulmod(addmod(t, s->second, l), invmod(2, l), l);
            if (x > y) std::swap(x, y);
            r.rep = {x, 0, 0, y};
            r.size = l * l + l;
            break;
        }
        case ConjKind::NonSplit: {
            if (l == 2) {
                r.rep = {1, 1, 1, 0};
                r.size = 2;
                break;
            }
            u64 t = tr(g), d = det(g);
            u64 x = mulmod(t, invmod(2, l), l);
            u64 y2 = mulmod(submod(mulmod(x, x, l), d, l), invmod(r_, l), l);
            auto s = sqrt_mod(y2, l);
            u64 y = s->first;  // smaller root, in [1, (l-1)/2]
            r.rep = {x, mulmod(r_, y, l), y, x};
            r.size = l * l - l;
            break;
        }
    }
    return r;
}

std::vector<ConjClassRep> Gl2Ctx::conj_classes() const {
    std::vector<ConjClassRep> out;
    u64 l = l_;
    if (l == 2) {
        out.push_back({ConjKind::Scalar, {1, 0, 0, 1}, 1});
        out.push_back({ConjKind::NonSemisimple, {1, 1, 0, 1}, 3});
        out.push_back({ConjKind::NonSplit, {1, 1, 1, 0}, 2});
        return out;
    }
    for (u64 x = 1; x < l; x++) out.push_back({ConjKind::Scalar, {x, 0, 0, x}, 1});
    for (u64 x = 1; x < l; x++) out.push_back({ConjKind::NonSemisimple, {x, 1, 0, x}, l * l - 1});
    for (u64 x = 1; x < l; x++)
        for (u64 y = x + 1; y < l; y++) out.push_back({ConjKind::Split, {x, 0, 0, y}, l * l + l});
    for (u64 x = 0; x < l; x++)
        for (u64 y = 1; y <= (l - 1) / 2; y++) {
            if (submod(mulmod(x, x, l), mulmod(r_, mulmod(y, y, l), l), l) == 0) continue;
            out.push_back({ConjKind::NonSplit, {x, mulmod(r_, y, l), y, x}, l * l - l});
        }
    return out;
}

u64 Gl2Ctx::group_order() const { return (l_ * l_ - 1) * (l_ * l_ - l_); }

std::vector<uint32_t> Gl2Ctx::closure(const std::vector<Mat>& gens, size_t cap) const {
    std::unordered_set<uint32_t> seen;
    std::deque<uint32_t> queue;
    seen.insert(pack(I()));
    queue.push_back(pack(I()));
    while (!queue.empty()) {
        Mat x = unpack(queue.front());
        queue.pop_front();
        for (const Mat& g : gens) {
            Mat y = mul(x, g);
            uint32_t k = pack(y);
            if (seen.insert(k).second) {
                if (seen.size() > cap) throw std::length_error("closure: cap exceeded");
                queue.push_back(k);
            }
        }
    }
    std::vector<uint32_t> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

u64 trace_power(u64 dt, u64 t, u64 n, u64 ell) {
    if (n == 0) return 2 % ell;
    // [a_{k+1}, a_k] = M [a_k, a_{k-1}] with M = [[t, -dt], [1, 0]]
    u64 m00 = 1, m01 = 0, m10 = 0, m11 = 1;  // M^(n-1) accumulated
    u64 b00 = t % ell, b01 = negmod(dt % ell, ell), b10 = 1, b11 = 0;
    u64 e = n - 1;
    while (e) {
        if (e & 1) {
            u64 n00 = addmod(mulmod(m00, b00, ell), mulmod(m01, b10, ell), ell);
            u64 n01 = addmod(mulmod(m00, b01, ell), mulmod(m01, b11, ell), ell);
            u64 n10 = addmod(mulmod(m10, b00, ell), mulmod(m11, b10, ell), ell);
            u64 n11 = addmod(mulmod(m10, b01, ell), mulmod(m11, b11, ell), ell);
            m00 = n00, m01 = n01, m10 = n10, m11 = n11;
        }
        u64 c00 = addmod(mulmod(b00, b00, ell), mulmod(b01, b10, ell), ell);
        u64 c01 = addmod(mulmod(b00, b01, ell), mulmod(b01, b11, ell), ell);
        u64 c10 = addmod(mulmod(b10, b00, ell), mulmod(b11, b10, ell), ell);
        u64 c11 = addmod(mulmod(b10, b01, ell), mulmod(b11, b11, ell), ell);
        b00 = c00, b01 = c01, b10 = c10, b11 = c11;
        e >>= 1;
    }
    // [a_n, a_{n-1}] = M^(n-1) [a_1, a_0]
    return addmod(mulmod(m00, t % ell, ell), mulmod(m01, 2 % ell, ell), ell);
}

std::string mat_to_string(const Mat& m) {
    return "[[" + std::to_string(m.a) + "," + std::to_string(m.b) + "],[" + std::to_string(m.c) +
           "," + std::to_string(m.d) + "]]";
}

} // namespace galrep
