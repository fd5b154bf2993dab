#pragma once

#include <cmath>
#include <cstdint>

namespace rsauto {

/// Deterministic 64-bit generator (splitmix64). Used everywhere a seeded
/// stream is needed so results do not depend on platform library details.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : s_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (s_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in (0, 1].
    double uniform01() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t s_;
};

/// Standard normal via Box-Muller, one pair per two uniforms.
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : rng_(seed) {}

    double next() {
        if (have_) {
            have_ = false;
            return spare_;
        }
        const double u1 = rng_.uniform01();
        const double u2 = rng_.uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(t);
        have_ = true;
        return r * std::cos(t);
    }

private:
    SplitMix64 rng_;
    double spare_ = 0.0;
    bool have_ = false;
};

/// Stable seed combiner for (master, stream, counter) triples.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t counter) {
    SplitMix64 g(master ^ (stream * 0xD6E8FEB86659FD93ull) ^ (counter * 0xA5A5A5A5A5A5A5A5ull));
    g.next();
    return g.next();
}

}  // namespace rsauto
