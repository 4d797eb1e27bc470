#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "galrep/gl2.hpp"

namespace galrep {

u64 alpha(u64 n);  // number of subgroups of Z(n) x Z(n)
u64 beta(u64 n);   // number fixed by coordinate swap

struct CountByCase {
    u64 sl2 = 0, borel = 0, cs = 0, cn = 0, z = 0;
    u64 cs_plus = 0, cn_plus = 0, cs_ns_plus = 0;
    u64 a4 = 0, s4 = 0, a5 = 0;
    u64 total() const { return sl2 + borel + cs + cn - z + cs_plus + cn_plus - cs_ns_plus + a4 + s4 + a5; }
};
CountByCase count_by_case(u64 ell);

enum class ProjType { Trivial, Cyclic, Dihedral, Borel, ExcA4, ExcS4, ExcA5, ContainsSL2 };

// exact signature of a subgroup: element triples (det, tr, dim1) and the
// trace-zero proportion z = zero_count/total
struct Signature {
    std::vector<uint32_t> triples;  // packed, sorted
    u64 zero_count = 0, total = 0;
    bool operator==(const Signature&) const = default;
};

inline uint32_t pack_triple(u64 det, u64 tr, int dim1, u64 ell) {
    return (uint32_t)((det * ell + tr) * 4 + (u64)dim1);
}
struct Triple {
    u64 det, tr;
    int dim1;
};
inline Triple unpack_triple(uint32_t k, u64 ell) {
    return {(k / 4) / ell, (k / 4) % ell, (int)(k & 3)};
}

struct ReducedSignature {
    u64 ell = 0;
    std::vector<uint32_t> triples;  // at most 11 retained
    bool has_121 = false;
    u64 m = 1;               // max projective order witnessed (prime-to-l reading)
    u64 lambda = 1;          // lcm of projective orders
    int chi_mask = 0;        // bit 0: chi=-1 seen, bit 1: chi=0, bit 2: chi=+1
    u64 det_order = 1;       // |det(s)| as subgroup of F_l^x
    u64 z_order = 1;         // |Z(s)| as scalar subgroup
    bool two_distinct_order2 = false;
    u64 zero_count = 0, total = 0;  // z estimate
};

struct SubgroupClass {
    u64 level = 0;
    std::vector<Mat> gens;
    std::string label;
    u64 order = 0;
    u64 index = 0;
    u64 det_index = 1;
    bool has_minus_one = false;
    u64 d0 = 0, d1 = 0;
    int twist_count = 0;
    ProjType proj_type = ProjType::Trivial;
};

struct ReconstructionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Lattice {
public:
    explicit Lattice(u64 ell);
    ~Lattice();
    Lattice(const Lattice&) = delete;
    Lattice& operator=(const Lattice&) = delete;

    const Gl2Ctx& ctx() const;
    u64 ell() const;

    // Every subgroup of GL_2(l) up to conjugacy, deterministic order, all
    // attributes filled.
    const std::vector<SubgroupClass>& classes();

    // Exceptional construction: projective image H, scalar subgroup of the
    // given order containing -1, det index i over det(Z). Returns nullopt
    // when no such class exists.
    std::optional<SubgroupClass> construct_exceptional(ProjType h, u64 z_order, int i);

    Signature signature(const std::vector<Mat>& gens, size_t cap = 1000000) const;
    ReducedSignature reduce_signature(const Signature& s) const;
    SubgroupClass group_from_signature(const ReducedSignature& rs);

    // classification of arbitrary generators: canonical label + attributes
    SubgroupClass identify(const std::vector<Mat>& gens);
    SubgroupClass from_label(const std::string& label);

    SubgroupClass locally_conjugate_partner(const SubgroupClass& c);
    std::vector<SubgroupClass> twist_groups(const SubgroupClass& c);
    std::pair<u64, u64> d0_d1(const std::vector<Mat>& gens) const;

    bool conjugate(const SubgroupClass& a, const SubgroupClass& b);

    // one line per class, tab-separated; byte-stable
    std::string export_tsv();

    struct Impl;

private:
    std::unique_ptr<Impl> impl_;
};

// label helpers usable without a Lattice
bool parse_label_syntax(const std::string& label, u64& ell);

} // namespace galrep
