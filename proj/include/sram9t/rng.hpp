#pragma once

#include <cstdint>

#include "sram9t/logic.hpp"

namespace sram9t {

// SplitMix64 step; used to derive independent per-stream seeds.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Deterministic generator with explicit gaussian sampling so that identical
// seeds give bit-identical streams on every platform. xoshiro256** core.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed);

    std::uint64_t next_u64();
    double uniform01();          // in (0, 1)
    double gaussian();           // Box-Muller, one value per call
    bool bit() { return (next_u64() >> 63) != 0; }
    Logic logic_bit() { return logic_from_bool(bit()); }
    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n);

private:
    std::uint64_t s_[4];
};

} // namespace sram9t
