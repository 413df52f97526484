#include "core/rng.h"

#include <cmath>

namespace avatar {

uint64_t Rng::hash(uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

uint64_t Rng::bits(uint64_t counter) const {
    uint64_t v = hash(seed_ ^ 0x5851f42d4c957f2dULL);
    v = hash(v + stream_);
    v = hash(v + counter * 0x9e3779b97f4a7c15ULL);
    return v;
}

double Rng::uniform(uint64_t counter) const {
    return (bits(counter) >> 11) * (1.0 / 9007199254740992.0);  // 53-bit mantissa
}

uint64_t Rng::index(uint64_t counter, uint64_t n) const {
    return static_cast<uint64_t>(uniform(counter) * static_cast<double>(n)) % n;
}

double Rng::normal(uint64_t counter) const {
    double u1 = uniform(2 * counter);
    double u2 = uniform(2 * counter + 1);
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

Vec3 Rng::sphere(uint64_t counter) const {
    double ct = 1.0 - 2.0 * uniform(2 * counter);  // cos theta uniform in [-1, 1]
    double phi = kTwoPi * uniform(2 * counter + 1);
    double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    return {st * std::cos(phi), st * std::sin(phi), ct};
}

}  // namespace avatar
