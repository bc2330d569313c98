#pragma once

#include <cstdint>

namespace ggt {

// splitmix64. Deterministic across platforms, which keeps seeded reports
// byte-identical; std::mt19937 + distributions would not guarantee that.
struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), n >= 1
    uint64_t uniform(uint64_t n) {
        uint64_t threshold = (0ULL - n) % n;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    int uniform_int(int lo, int hi) { // inclusive bounds
        return lo + static_cast<int>(uniform(static_cast<uint64_t>(hi - lo + 1)));
    }

    bool coin() { return next() & 1; }
};

} // namespace ggt
