#pragma once

// Deterministic randomness. All draws go through this wrapper so that a seed
// fully determines every simulation artifact regardless of platform: the
// mt19937_64 sequence is standard-mandated, and the uniform mappings below
// avoid std::uniform_*_distribution, whose output is implementation-defined.

#include <cstdint>
#include <random>

namespace maecsim {

// splitmix64 finalizer; used to derive independent sub-stream seeds from one
// base seed without correlated low bits.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi); returns lo when the interval is empty.
    double uniform(double lo, double hi) { return lo + unit() * (hi - lo); }

    // Uniform in [0, n); rejection sampling, so no modulo bias.
    std::uint64_t uniform_index(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    std::uint64_t raw() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

}  // namespace maecsim
