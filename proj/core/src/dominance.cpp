#include "plc/dominance.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "plc/errors.hpp"

namespace plc {

RankBitVector::RankBitVector(std::size_t n) : words_((n + 63) / 64 + 1, 0) {}

void RankBitVector::build_rank() {
    cum_.assign(words_.size() + 1, 0);
    for (std::size_t w = 0; w < words_.size(); ++w)
        cum_[w + 1] = cum_[w] + static_cast<std::uint32_t>(std::popcount(words_[w]));
}

std::size_t RankBitVector::rank1(std::size_t i) const {
    const std::size_t w = i >> 6;
    const unsigned off = i & 63;
    const std::uint64_t mask = off ? (~std::uint64_t{0} >> (64 - off)) : 0;
    return cum_[w] + static_cast<std::size_t>(std::popcount(words_[w] & mask));
}

WaveletMatrix::WaveletMatrix(std::vector<std::uint32_t> values) : n_(values.size()) {
    std::uint32_t top = 0;
    for (auto v : values) top = std::max(top, v);
    bits_ = n_ ? static_cast<unsigned>(std::bit_width(top)) : 0;
    levels_.resize(bits_);
    zeros_.resize(bits_);
    std::vector<std::uint32_t> next(n_);
    for (unsigned level = 0; level < bits_; ++level) {
        const unsigned shift = bits_ - 1 - level;
        RankBitVector bv(n_);
        std::size_t z = 0;
        for (std::size_t i = 0; i < n_; ++i)
            if (((values[i] >> shift) & 1U) == 0) ++z;
        std::size_t zi = 0;
        std::size_t oi = z;
        for (std::size_t i = 0; i < n_; ++i) {
            if ((values[i] >> shift) & 1U) {
                bv.set(i);
                next[oi++] = values[i];
            } else {
                next[zi++] = values[i];
            }
        }
        bv.build_rank();
        levels_[level] = std::move(bv);
        zeros_[level] = z;
        values.swap(next);
    }
}

std::size_t WaveletMatrix::count_less(std::size_t lo, std::size_t hi, std::uint64_t bound) const {
    if (lo >= hi) return 0;
    if (bits_ == 0) return bound > 0 ? hi - lo : 0;  // every value is 0
    if (bound >= (std::uint64_t{1} << bits_)) return hi - lo;
    std::size_t result = 0;
    for (unsigned level = 0; level < bits_; ++level) {
        const unsigned shift = bits_ - 1 - level;
        const RankBitVector& bv = levels_[level];
        const std::size_t lo0 = bv.rank0(lo);
        const std::size_t hi0 = bv.rank0(hi);
        if ((bound >> shift) & 1U) {
            // values with a 0 here are smaller than bound
            result += hi0 - lo0;
            lo = zeros_[level] + (lo - lo0);
            hi = zeros_[level] + (hi - hi0);
        } else {
            lo = lo0;
            hi = hi0;
        }
    }
    return result;
}

DominanceCounter::DominanceCounter(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw ContractError("DominanceCounter: coordinate arrays differ in length");
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        if (std::isnan(a[i]) || std::isnan(b[i])) throw ContractError("DominanceCounter: NaN coordinate");

    std::vector<std::uint32_t> by_b(n);
    std::iota(by_b.begin(), by_b.end(), 0U);
    std::stable_sort(by_b.begin(), by_b.end(), [&](auto i, auto j) { return b[i] < b[j]; });
    std::vector<std::uint32_t> rank(n);
    b_sorted_.resize(n);
    for (std::size_t r = 0; r < n; ++r) {
        rank[by_b[r]] = static_cast<std::uint32_t>(r);
        b_sorted_[r] = b[by_b[r]];
    }

    std::vector<std::uint32_t> by_a(n);
    std::iota(by_a.begin(), by_a.end(), 0U);
    std::stable_sort(by_a.begin(), by_a.end(), [&](auto i, auto j) { return a[i] < a[j]; });
    std::vector<std::uint32_t> seq(n);
    a_sorted_.resize(n);
    for (std::size_t p = 0; p < n; ++p) {
        seq[p] = rank[by_a[p]];
        a_sorted_[p] = a[by_a[p]];
    }
    ranks_ = WaveletMatrix(std::move(seq));
}

std::size_t DominanceCounter::count(double x1, double x2) const {
    const std::size_t n = a_sorted_.size();
    const auto from = static_cast<std::size_t>(std::lower_bound(a_sorted_.begin(), a_sorted_.end(), x1) - a_sorted_.begin());
    const auto rank_floor =
        static_cast<std::size_t>(std::lower_bound(b_sorted_.begin(), b_sorted_.end(), x2) - b_sorted_.begin());
    if (from == n || rank_floor == n) return 0;
    return (n - from) - ranks_.count_less(from, n, rank_floor);
}

}  // namespace plc
