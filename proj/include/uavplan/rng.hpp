#pragma once

#include <cstdint>
#include <random>

namespace uavplan {

// Single named random stream; all draws in a run flow through one instance
// so results are a pure function of the seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Uniform index in [0, n). n must be > 0.
    std::size_t uniform_index(std::size_t n) { return static_cast<std::size_t>(gen_() % n); }

    // Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    std::uint64_t next() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

// splitmix64-style mix used to derive independent child seeds, e.g. one per
// (sweep count, trial) pair, so adding counts does not perturb earlier trials.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t a, std::uint64_t b) {
    return mix_seed(mix_seed(root, a), b);
}

}  // namespace uavplan
