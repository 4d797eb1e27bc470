#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "galrep/gl2.hpp"

using namespace galrep;

TEST_CASE("invariants basic examples") {
    Gl2Ctx G(5);
    auto iv = G.invariants(G.I());
    CHECK(iv.det == 1);
    CHECK(iv.tr == 2);
    CHECK(iv.dim1 == 2);

    auto t = G.invariants({1, 1, 0, 1});
    CHECK(t.det == 1);
    CHECK(t.tr == 2);
    CHECK(t.dim1 == 1);

    Gl2Ctx G7(7);
    auto d = G7.invariants({1, 0, 0, 6});
    CHECK(d.det == 6);
    CHECK(d.tr == 0);
    CHECK(d.dim1 == 1);
    CHECK(d.chi == 1);  // disc = 4 is a square
}

TEST_CASE("trace_power") {
    CHECK(trace_power(1, 2, 3, 7) == 2);   // unipotent
    CHECK(trace_power(3, 5, 0, 11) == 2);  // a_0 = 2
    Gl2Ctx G(13);
    Rng rng(3);
    for (int i = 0; i < 1000; i++) {
        Mat g{rng.below(13), rng.below(13), rng.below(13), rng.below(13)};
        if (G.det(g) == 0) continue;
        u64 n = rng.below(51);
        CHECK(trace_power(G.det(g), G.tr(g), n, 13) == G.tr(G.pow(g, n)));
    }
}

TEST_CASE("projective order") {
    Gl2Ctx G(11);
    CHECK(G.proj_order(G.I()) == 1);
    CHECK(G.proj_order({1, 1, 0, 1}) == 11);
    CHECK(G.proj_order({3, 0, 0, 8}) == 2);  // trace zero
    // against brute force: smallest r with g^r scalar
    for (u64 ell : {3ULL, 5ULL, 7ULL, 13ULL}) {
        Gl2Ctx Gc(ell);
        Rng rng(ell);
        int done = 0;
        while (done < 1000) {
            Mat g{rng.below(ell), rng.below(ell), rng.below(ell), rng.below(ell)};
            if (Gc.det(g) == 0) continue;
            done++;
            Mat x = g;
            u64 r = 1;
            while (!Gc.is_scalar(x)) x = Gc.mul(x, g), r++;
            CHECK(Gc.proj_order(g) == r);
        }
    }
}

TEST_CASE("conj_classes partition GL2") {
    for (u64 ell : {3ULL, 5ULL, 7ULL}) {
        Gl2Ctx G(ell);
        auto classes = G.conj_classes();
        u64 total = 0;
        std::map<uint32_t, u64> counts;  // packed rep -> observed size
        for (auto& c : classes) total += c.size;
        CHECK(total == G.group_order());
        if (ell == 5) {
            std::map<ConjKind, int> byKind;
            for (auto& c : classes) byKind[c.kind]++;
            CHECK(byKind[ConjKind::Scalar] == 4);
            CHECK(byKind[ConjKind::NonSemisimple] == 4);
            CHECK(byKind[ConjKind::Split] == 6);
            CHECK(byKind[ConjKind::NonSplit] == 10);
        }
        // every element maps to exactly one representative with matching sizes
        for (u64 a = 0; a < ell; a++)
            for (u64 b = 0; b < ell; b++)
                for (u64 c = 0; c < ell; c++)
                    for (u64 d = 0; d < ell; d++) {
                        Mat m{a, b, c, d};
                        if (G.det(m) == 0) continue;
                        auto cl = G.conj_class_of(m);
                        counts[pack(cl.rep)]++;
                    }
        CHECK(counts.size() == classes.size());
        for (auto& c : classes) {
            REQUIRE(counts.count(pack(c.rep)));
            CHECK(counts[pack(c.rep)] == c.size);
        }
    }
}

TEST_CASE("conj_classes at l=3 by orbit oracle") {
    Gl2Ctx G(3);
    // partition all 48 elements by brute conjugation
    std::vector<Mat> els;
    for (u64 a = 0; a < 3; a++)
        for (u64 b = 0; b < 3; b++)
            for (u64 c = 0; c < 3; c++)
                for (u64 d = 0; d < 3; d++) {
                    Mat m{a, b, c, d};
                    if (G.det(m) != 0) els.push_back(m);
                }
    REQUIRE(els.size() == 48);
    std::map<uint32_t, uint32_t> orbit_of;
    int orbits = 0;
    std::vector<u64> sizes;
    for (auto& m : els) {
        if (orbit_of.count(pack(m))) continue;
        orbits++;
        u64 size = 0;
        for (auto& h : els) {
            Mat c = G.mul(G.mul(h, m), G.inv(h));
            if (!orbit_of.count(pack(c))) {
                orbit_of[pack(c)] = pack(m);
                size++;
            }
        }
        sizes.push_back(size);
    }
    CHECK(orbits == 8);
    u64 tot = 0;
    for (u64 s : sizes) tot += s;
    CHECK(tot == 48);
    CHECK(G.conj_classes().size() == 8);
}

TEST_CASE("ell=2 classes") {
    Gl2Ctx G(2);
    auto cl = G.conj_classes();
    REQUIRE(cl.size() == 3);
    u64 tot = 0;
    for (auto& c : cl) tot += c.size;
    CHECK(tot == 6);
}

TEST_CASE("closure") {
    Gl2Ctx G(5);
    CHECK(G.closure({}).size() == 1);
    // standard generators of SL_2(5): order 120
    CHECK(G.closure({{1, 1, 0, 1}, {1, 0, 1, 1}}).size() == 120);
    // 5B.1.1 generators: order 20
    CHECK(G.closure({{1, 0, 0, 2}, {1, 1, 0, 1}}).size() == 20);
    CHECK_THROWS_AS(G.closure({{1, 1, 0, 1}, {1, 0, 1, 1}}, 50), std::length_error);
}

TEST_CASE("sig is conjugation-invariant") {
    Gl2Ctx G(13);
    Rng rng(17);
    for (int i = 0; i < 1000; i++) {
        Mat g{rng.below(13), rng.below(13), rng.below(13), rng.below(13)};
        Mat h{rng.below(13), rng.below(13), rng.below(13), rng.below(13)};
        if (G.det(g) == 0 || G.det(h) == 0) continue;
        Mat c = G.mul(G.mul(h, g), G.inv(h));
        auto i1 = G.invariants(g), i2 = G.invariants(c);
        CHECK(i1.det == i2.det);
        CHECK(i1.tr == i2.tr);
        CHECK(i1.dim1 == i2.dim1);
    }
}
