#ifndef PERMBASIS_RNG_HPP
#define PERMBASIS_RNG_HPP

#include <cstdint>

namespace permbasis {

// SplitMix64. Small, fast, and trivially reproducible across platforms;
// all randomized routines in this library take one of these by reference
// so that a (seed, stream) pair pins the whole run.
class SplitMix64 {
public:
    static constexpr uint64_t GAMMA = 0x9E3779B97F4A7C15ULL;

    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += GAMMA);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Independent stream for trial #idx of a master seed: the derived
    // seed is the finalizer applied to master ^ GAMMA*(idx+1), so
    // streams never collide with the master sequence itself.
    static SplitMix64 stream(uint64_t master, uint64_t idx) {
        SplitMix64 g(master ^ (GAMMA * (idx + 1)));
        return SplitMix64(g.next());
    }

    // Uniform in [0, bound) without modulo bias (threshold rejection).
    uint64_t below(uint64_t bound) {
        uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    uint64_t state() const { return state_; }

private:
    uint64_t state_;
};

}  // namespace permbasis

#endif
