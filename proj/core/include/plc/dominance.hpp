#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace plc {

/// Bit vector with constant-time rank.
class RankBitVector {
public:
    RankBitVector() = default;
    explicit RankBitVector(std::size_t n);

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void build_rank();

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    /// Number of zero bits in [0, i).
    std::size_t rank0(std::size_t i) const { return i - rank1(i); }
    /// Number of one bits in [0, i).
    std::size_t rank1(std::size_t i) const;

private:
    std::vector<std::uint64_t> words_;
    std::vector<std::uint32_t> cum_;  // ones before each word
};

/// Wavelet matrix over a sequence of integers in [0, 2^bits).
class WaveletMatrix {
public:
    WaveletMatrix() = default;
    explicit WaveletMatrix(std::vector<std::uint32_t> values);

    std::size_t size() const noexcept { return n_; }
    /// #{i ∈ [lo, hi) : values[i] < bound}.
    std::size_t count_less(std::size_t lo, std::size_t hi, std::uint64_t bound) const;

private:
    std::size_t n_ = 0;
    unsigned bits_ = 0;
    std::vector<RankBitVector> levels_;  // levels_[0] holds the most significant bit
    std::vector<std::size_t> zeros_;
};

/// Counts 2-D dominance: #{i : a_i ≥ x₁ and b_i ≥ x₂} in O(log n) per query
/// after O(n log n) preprocessing and O(n log n) bits of storage.
///
/// Points are sorted by a; the b-ranks in that order go into a wavelet matrix,
/// so a query becomes "how many of the last n - lower_bound(a, x₁) ranks are
/// at least lower_bound(b, x₂)". Ties count as exceedances.
class DominanceCounter {
public:
    DominanceCounter() = default;
    /// ContractError on size mismatch or NaN coordinates.
    DominanceCounter(std::span<const double> a, std::span<const double> b);

    std::size_t size() const noexcept { return a_sorted_.size(); }

    /// x = -∞ imposes no constraint, x = +∞ excludes everything.
    std::size_t count(double x1, double x2) const;

    std::span<const double> sorted_first() const noexcept { return a_sorted_; }
    std::span<const double> sorted_second() const noexcept { return b_sorted_; }

private:
    std::vector<double> a_sorted_;
    std::vector<double> b_sorted_;
    WaveletMatrix ranks_;
};

}  // namespace plc
