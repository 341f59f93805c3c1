#pragma once

#include <cstdint>

namespace pseudogas {

/// SplitMix64 finaliser.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Counter-based stream: the k-th output of substream (seed, stream) is
/// mix64(origin + k * golden), with origin a hash of both keys. Any
/// substream can be generated independently of every other one.
class CounterRng {
public:
    constexpr CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept
        : origin_(mix64(seed ^ mix64(stream + 0x632BE59BD9B4E019ULL))) {}

    constexpr std::uint64_t next() noexcept {
        ++counter_;
        return mix64(origin_ + counter_ * kGolden);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    constexpr double uniform() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
    std::uint64_t origin_;
    std::uint64_t counter_ = 0;
};

}  // namespace pseudogas
