#pragma once

#include <cstdint>

#include "core/vec3.h"

namespace avatar {

// Counter-based deterministic generator. Every draw is a pure function of
// (seed, stream, counter), so parallel consumers can index into the sequence
// without sharing state and results are reproducible across platforms and
// thread counts.
class Rng {
public:
    Rng() = default;
    Rng(uint64_t seed, uint64_t stream = 0) : seed_(seed), stream_(stream) {}

    static uint64_t hash(uint64_t x);

    uint64_t bits(uint64_t counter) const;

    // Uniform in [0, 1).
    double uniform(uint64_t counter) const;
    double uniform(uint64_t counter, double lo, double hi) const {
        return lo + (hi - lo) * uniform(counter);
    }
    // Uniform integer in [0, n).
    uint64_t index(uint64_t counter, uint64_t n) const;

    // Standard normal via Box-Muller; consumes counters 2*counter, 2*counter+1.
    double normal(uint64_t counter) const;

    // Uniform direction on the unit sphere by inverse-CDF on (cos theta, phi);
    // consumes counters 2*counter, 2*counter+1.
    Vec3 sphere(uint64_t counter) const;

    Rng sub(uint64_t stream) const { return Rng(seed_, hash(stream_ * 0x9e3779b97f4a7c15ULL + stream + 1)); }

    uint64_t seed() const { return seed_; }

private:
    uint64_t seed_ = 0;
    uint64_t stream_ = 0;
};

}  // namespace avatar
