#pragma once

#include <cstdint>

namespace mvdet {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// PCG32: small deterministic generator with explicit state, bit-stable
/// across platforms and standard-library versions.
class Pcg32 {
public:
    explicit Pcg32(uint64_t seed, uint64_t stream = 0) {
        state_ = 0;
        inc_ = (splitmix64(stream ^ 0xda3e39cb94b95bdbULL) << 1) | 1u;
        next_u32();
        state_ += splitmix64(seed);
        next_u32();
    }

    uint32_t next_u32() {
        const uint64_t old = state_;
        state_ = old * 6364136223846793005ULL + inc_;
        const uint32_t xorshifted = static_cast<uint32_t>(((old >> 18) ^ old) >> 27);
        const uint32_t rot = static_cast<uint32_t>(old >> 59);
        return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
    }

    /// Uniform in [0, 1).
    double uniform() { return next_u32() * (1.0 / 4294967296.0); }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    float uniform_f() { return static_cast<float>(uniform()); }

    float uniform_f(float lo, float hi) { return lo + (hi - lo) * uniform_f(); }

    /// Uniform integer in [0, n), n > 0.
    uint32_t below(uint32_t n) {
        // Lemire-style rejection for an unbiased bounded draw.
        uint64_t m = static_cast<uint64_t>(next_u32()) * n;
        uint32_t lo = static_cast<uint32_t>(m);
        if (lo < n) {
            const uint32_t t = (0u - n) % n;
            while (lo < t) {
                m = static_cast<uint64_t>(next_u32()) * n;
                lo = static_cast<uint32_t>(m);
            }
        }
        return static_cast<uint32_t>(m >> 32);
    }

private:
    uint64_t state_ = 0;
    uint64_t inc_ = 0;
};

} // namespace mvdet
