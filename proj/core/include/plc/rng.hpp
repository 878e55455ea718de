#pragma once

#include <cstdint>
#include <limits>

namespace plc {

/// SplitMix64 finalizer; a bijective 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Counter-based generator: draw number i of stream (seed, replication,
/// stream) is mix64(key + (i+1)·γ), with key derived from the three
/// coordinates. Every draw is addressable without touching any other, so
/// replications can run on any thread in any order.
///
/// Satisfies UniformRandomBitGenerator.
class CounterRng {
public:
    using result_type = std::uint64_t;

    constexpr CounterRng(std::uint64_t seed, std::uint64_t replication, std::uint64_t stream) noexcept
        : key_(mix64(mix64(mix64(seed) ^ (replication + kGamma)) ^ (stream * kGamma + 0x632be59bd9b4e019ULL))) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    constexpr result_type operator()() noexcept { return at(counter_++); }

    /// The i-th draw of this stream, independent of the current position.
    constexpr result_type at(std::uint64_t i) const noexcept { return mix64(key_ + (i + 1) * kGamma); }

    /// Uniform on the open interval (0, 1) with 53-bit resolution.
    double uniform() noexcept { return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53; }

    std::uint64_t position() const noexcept { return counter_; }

private:
    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Fixed stream identifiers inside one replication.
enum class Stream : std::uint64_t {
    jumps_first = 0,   // jumps indexed by component 1
    jumps_second = 1,  // residual jumps indexed by component 2
    brownian_first = 2,
    brownian_second = 3,
    scheme_first = 4,
    scheme_second = 5,
};

inline CounterRng make_rng(std::uint64_t seed, std::uint64_t replication, Stream s) noexcept {
    return CounterRng(seed, replication, static_cast<std::uint64_t>(s));
}

}  // namespace plc
