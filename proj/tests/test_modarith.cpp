#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galrep/fppoly.hpp"
#include "galrep/modarith.hpp"
#include "galrep/zpoly.hpp"

using namespace galrep;

TEST_CASE("least_generator small cases") {
    CHECK(least_generator(5) == 2);
    CHECK(least_generator(7) == 3);
    CHECK(least_generator(3) == 2);
    CHECK_THROWS(least_generator(8));
}

TEST_CASE("least_generator has order exactly p-1 for all p < 10^4") {
    for (u64 p : primes_in(3, 9999)) {
        u64 g = least_generator(p);
        u64 ord = 1, x = g;
        while (x != 1) x = mulmod(x, g, p), ord++;
        CHECK(ord == p - 1);
    }
}

TEST_CASE("sqrt_mod") {
    auto r = sqrt_mod(4, 7);
    REQUIRE(r.has_value());
    CHECK(r->first == 2);
    CHECK(r->second == 5);
    CHECK(!sqrt_mod(3, 7).has_value());
    auto z = sqrt_mod(0, 5);
    REQUIRE(z.has_value());
    CHECK(z->first == 0);
    Rng rng(7);
    for (int i = 0; i < 200; i++) {
        u64 p = 1000003;
        u64 a = rng.below(p);
        auto s = sqrt_mod(a, p);
        if (s) CHECK(mulmod(s->first, s->first, p) == a % p);
        else CHECK(legendre(a, p) == -1);
    }
}

TEST_CASE("divisors") {
    CHECK(divisors(1) == std::vector<u64>{1});
    CHECK(divisors(24) == std::vector<u64>{1, 2, 3, 4, 6, 8, 12, 24});
    CHECK(divisors(48).size() == 10);  // tau(7^2-1), Table 2 Cn column at l=7
    for (u64 n : {12ULL, 360ULL, 9973ULL, 65536ULL}) {
        auto d = divisors(n);
        CHECK(d.size() == tau(n));
        for (u64 x : d) CHECK(n % x == 0);
    }
}

TEST_CASE("factor_int and primality") {
    CHECK(is_prime(2));
    CHECK(is_prime(1000003));
    CHECK(!is_prime(1000001));
    auto f = factor_int(2 * 2 * 3 * 17 * 1000003ULL);
    REQUIRE(f.size() == 4);
    CHECK(f[0] == std::pair<u64, int>{2, 2});
    CHECK(f[3] == std::pair<u64, int>{1000003, 1});
}

TEST_CASE("Fp2 frobenius is conjugation") {
    Rng rng(42);
    for (u64 p : {5ULL, 13ULL, 1009ULL}) {
        Fp2Ctx F(p);
        CHECK(legendre(F.eps(), p) == -1);
        for (int i = 0; i < 50; i++) {
            Fp2 a = F.make(rng.below(p), rng.below(p));
            CHECK(F.pow(a, p) == F.conj(a));
        }
    }
}

TEST_CASE("fp polynomial factorization examples") {
    Rng rng(1);
    // x^3 - x over F_5 = x (x-1) (x+1)
    FpPoly f = fp_poly(5, {0, 4, 0, 1});
    auto fac = fp_factor(f, rng);
    REQUIRE(fac.size() == 3);
    for (auto& [g, m] : fac) {
        CHECK(g.deg() == 1);
        CHECK(m == 1);
    }
    // x^2+1 irreducible over F_3
    FpPoly g3 = fp_poly(3, {1, 0, 1});
    auto fac3 = fp_factor(g3, rng);
    REQUIRE(fac3.size() == 1);
    CHECK(fac3[0].first.deg() == 2);
    CHECK(fp_irreducible(g3));
    // x^2+1 = (x-2)(x-3) over F_5
    FpPoly g5 = fp_poly(5, {1, 0, 1});
    auto fac5 = fp_factor(g5, rng);
    REQUIRE(fac5.size() == 2);
    CHECK(fac5[0].first == fp_poly(5, {2, 1}));  // x+2 = x-3
    CHECK(fac5[1].first == fp_poly(5, {3, 1}));  // x+3 = x-2
}

TEST_CASE("fp factorization reproduces the input on random polynomials") {
    Rng rng(99);
    for (int trial = 0; trial < 1000; trial++) {
        u64 p = trial % 3 == 0 ? 2 : (trial % 3 == 1 ? 13 : 9973);
        int d = 1 + (int)rng.below(trial % 5 == 0 ? 30 : 8);
        std::vector<u64> c(d + 1);
        for (auto& v : c) v = rng.below(p);
        c[d] = 1 + rng.below(p - 1);
        FpPoly f = fp_poly(p, c);
        if (f.deg() < 1) continue;
        auto fac = fp_factor(f, rng);
        FpPoly prod = fp_const(p, f.lead());
        for (auto& [g, m] : fac) {
            CHECK(g.lead() == 1);
            for (int i = 0; i < m; i++) prod = fp_mul(prod, g);
        }
        CHECK(prod == f);
    }
}

TEST_CASE("z polynomial basics") {
    ZPoly f = z_poly({mpz_class(-1), mpz_class(0), mpz_class(1)});  // x^2-1
    Rng rng(5);
    auto fac = hensel_factor_z(f, rng);
    REQUIRE(fac.size() == 2);
    CHECK(fac[0] == z_poly({mpz_class(-1), mpz_class(1)}));
    CHECK(fac[1] == z_poly({mpz_class(1), mpz_class(1)}));

    ZPoly g = z_poly({mpz_class(1), mpz_class(0), mpz_class(1)});  // x^2+1
    auto fg = hensel_factor_z(g, rng);
    REQUIRE(fg.size() == 1);
    CHECK(fg[0] == g);
}

TEST_CASE("hensel on products with larger coefficients") {
    Rng rng(11);
    // (3x^3 + 2x + 7)(x^4 + 10x - 1)(x - 12345); the cubic has no rational root
    ZPoly a = z_poly({mpz_class(7), mpz_class(2), mpz_class(0), mpz_class(3)});
    ZPoly b = z_poly({mpz_class(-1), mpz_class(10), mpz_class(0), mpz_class(0), mpz_class(1)});
    ZPoly c = z_poly({mpz_class(-12345), mpz_class(1)});
    ZPoly f = z_mul(z_mul(a, b), c);
    auto fac = hensel_factor_z(f, rng);
    REQUIRE(fac.size() == 3);
    CHECK(fac[0] == c);
    CHECK(fac[1] == a);
    CHECK(fac[2] == b);
    CHECK(z_min_factor_degree(f, rng) == 1);
}

TEST_CASE("resultant") {
    // res(x^2-1, x-2) = (2^2-1) = 3
    ZPoly a = z_poly({mpz_class(-1), mpz_class(0), mpz_class(1)});
    ZPoly b = z_poly({mpz_class(-2), mpz_class(1)});
    CHECK(z_resultant(a, b) == 3);
    // res of two quadratics with known value: res(x^2+1, x^2+4) = 9
    ZPoly c = z_poly({mpz_class(4), mpz_class(0), mpz_class(1)});
    ZPoly d = z_poly({mpz_class(1), mpz_class(0), mpz_class(1)});
    CHECK(z_resultant(d, c) == 9);
}
