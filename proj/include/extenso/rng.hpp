#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace extenso {

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256** seeded via splitmix64.  Self-contained so results are
// identical across platforms and standard libraries; derive(stream) gives
// independent streams for sharded work, making reductions order-free.
class Rng {
public:
    explicit Rng(uint64_t seed) {
        uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
    }

    Rng derive(uint64_t stream) const {
        uint64_t mix = s_[0];
        mix ^= stream + 0x9e3779b97f4a7c15ULL + (mix << 6) + (mix >> 2);
        return Rng(mix);
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

    // uniform in [0, 1), 53 random bits
    double uniform() { return double(next() >> 11) * 0x1.0p-53; }

    // uniform in [0, bound)
    uint64_t bounded(uint64_t bound) {
        uint64_t threshold = -bound % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    std::vector<int> permutation(int n) {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        for (int i = n - 1; i > 0; --i)
            std::swap(p[i], p[bounded(uint64_t(i) + 1)]);
        return p;
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t s_[4];
};

} // namespace extenso
