#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "galrep/modarith.hpp"

namespace galrep {

// 2x2 matrices over Z/lZ acting on column vectors from the left. Prime level
// only; l < 256 so elements pack into 32 bits.
struct Mat {
    u64 a = 0, b = 0, c = 0, d = 0;
    bool operator==(const Mat&) const = default;
};

inline uint32_t pack(const Mat& m) {
    return (uint32_t)m.a | ((uint32_t)m.b << 8) | ((uint32_t)m.c << 16) | ((uint32_t)m.d << 24);
}
inline Mat unpack(uint32_t k) {
    return {k & 0xff, (k >> 8) & 0xff, (k >> 16) & 0xff, (k >> 24) & 0xff};
}

struct ElementInvariants {
    u64 det = 0, tr = 0;
    int dim1 = 0;         // dimension of the 1-eigenspace
    u64 disc = 0;         // tr^2 - 4 det
    int chi = 0;          // Legendre symbol of disc
    u64 u = 0;            // tr^2 / det
    u64 proj_order = 0;   // order of the image in PGL_2(l)
};

enum class ConjKind { Scalar, NonSemisimple, Split, NonSplit };

struct ConjClassRep {
    ConjKind kind;
    Mat rep;
    u64 size = 0;
};

// Shared per-level context: generators, divisor lists, and the projective
// order lookup table over C_s(l) and C_ns(l).
class Gl2Ctx {
public:
    explicit Gl2Ctx(u64 ell);

    u64 ell() const { return l_; }
    u64 r() const { return r_; }      // least generator of F_l^x
    u64 eps() const { return r_; }    // the fixed non-square (l odd)
    Mat cns_gen() const { return cns_gen_; }
    const std::vector<u64>& div_l1() const { return div_l1_; }    // divisors of l-1
    const std::vector<u64>& div_l21() const { return div_l21_; }  // divisors of l^2-1

    Mat I() const { return {1, 0, 0, 1}; }
    Mat scalar(u64 z) const { return {z % l_, 0, 0, z % l_}; }
    Mat mul(const Mat& x, const Mat& y) const;
    Mat inv(const Mat& x) const;
    Mat pow(Mat x, u64 e) const;
    u64 det(const Mat& x) const;
    u64 tr(const Mat& x) const;
    bool is_scalar(const Mat& x) const { return x.b == 0 && x.c == 0 && x.a == x.d; }

    ElementInvariants invariants(const Mat& g) const;
    u64 proj_order(const Mat& g) const;
    u64 proj_order_semisimple(u64 det, u64 tr) const;  // lookup by u value

    ConjKind conj_kind(const Mat& g) const;
    ConjClassRep conj_class_of(const Mat& g) const;
    std::vector<ConjClassRep> conj_classes() const;

    u64 group_order() const;  // |GL_2(l)|

    // full subgroup closure by breadth-first products; throws if cap exceeded
    std::vector<uint32_t> closure(const std::vector<Mat>& gens, size_t cap = 1000000) const;

    // order of x in F_l^x
    u64 mult_order(u64 x) const;

private:
    u64 l_, r_;
    Mat cns_gen_{};
    std::vector<u64> div_l1_, div_l21_;
    std::unordered_map<u64, u64> proj_table_;  // u(g) -> |pi(g)| over C_s u C_ns
};

// trace of g^n from det, tr via the recurrence a_{n+2} = a_1 a_{n+1} - a_n det
u64 trace_power(u64 det, u64 tr, u64 n, u64 ell);

std::string mat_to_string(const Mat& m);  // [[a,b],[c,d]]

} // namespace galrep
