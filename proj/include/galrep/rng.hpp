#pragma once

#include <cstdint>

namespace galrep {

// xoshiro256** with splitmix64 seeding. Every randomized routine in the
// library draws from one of these, seeded (directly or via derive()) from the
// single run-level master seed, so whole pipelines replay exactly.
class Rng {
public:
    explicit Rng(uint64_t seed) {
        uint64_t x = seed;
        for (auto& w : s_) {
            x += 0x9e3779b97f4a7c15ULL;
            uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            w = z ^ (z >> 31);
        }
    }

    uint64_t next() {
        uint64_t result = rotl(s_[1] * 5, 7) * 9;
        uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform in [0, n)
    uint64_t below(uint64_t n) {
        uint64_t threshold = (0 - n) % n;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    // child stream for worker i; independent of draws on this stream
    Rng derive(uint64_t i) const {
        Rng r(0);
        r.s_[0] = s_[0] ^ (0x8ae8a08ff556ca2bULL + i);
        r.s_[1] = s_[1] + 0x9e3779b97f4a7c15ULL * (i + 1);
        r.s_[2] = s_[2] ^ rotl(i + 0x60642e2a34326f45ULL, 23);
        r.s_[3] = s_[3] + (i << 32 | 0x5851f42dULL);
        for (int k = 0; k < 8; k++) r.next();
        return r;
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t s_[4];
};

} // namespace galrep
