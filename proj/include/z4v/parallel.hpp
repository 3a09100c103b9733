#pragma once

#include <bit>
#include <cstdint>
#include <thread>
#include <vector>

#include "z4v/z4_linalg.hpp"

namespace z4v {

// Z4V_THREADS if set, else hardware concurrency.
std::size_t worker_threads();

// A Z4 vector as two bit planes: value = lo + 2*hi per coordinate.
struct PackedWord {
    const std::uint64_t* lo;
    const std::uint64_t* hi;
    std::size_t words;
};

inline int packed_lee(const PackedWord& w) {
    int s = 0;
    for (std::size_t i = 0; i < w.words; ++i)
        s += std::popcount(w.lo[i]) + 2 * std::popcount(w.hi[i] & ~w.lo[i]);
    return s;
}

inline int packed_euclidean(const PackedWord& w) {
    int s = 0;
    for (std::size_t i = 0; i < w.words; ++i)
        s += std::popcount(w.lo[i]) + 4 * std::popcount(w.hi[i] & ~w.lo[i]);
    return s;
}

inline int packed_hamming(const PackedWord& w) {
    int s = 0;
    for (std::size_t i = 0; i < w.words; ++i) s += std::popcount(w.lo[i] | w.hi[i]);
    return s;
}

// Coordinates (2i, 2i+1) form one symbol of R under the Gray map.
inline int packed_pair_hamming(const PackedWord& w) {
    constexpr std::uint64_t even = 0x5555555555555555ULL;
    int s = 0;
    for (std::size_t i = 0; i < w.words; ++i) {
        std::uint64_t nz = w.lo[i] | w.hi[i];
        s += std::popcount((nz | (nz >> 1)) & even);
    }
    return s;
}

inline Z4 packed_at(const PackedWord& w, std::size_t j) {
    const std::uint64_t bit = std::uint64_t{1} << (j & 63);
    return Z4(((w.lo[j >> 6] & bit) ? 1 : 0) + ((w.hi[j >> 6] & bit) ? 2 : 0));
}

Z4Vector unpack(const PackedWord& w, std::size_t n);

class PackedBasis {
public:
    explicit PackedBasis(const Z4Code& c);

    std::size_t length() const { return n_; }
    std::size_t words() const { return words_; }
    std::size_t rows() const { return radix_.size(); }
    unsigned log2_count() const { return log2_; }
    std::uint8_t radix(std::size_t i) const { return radix_[i]; }
    const std::uint64_t* lo(std::size_t i) const { return planes_.data() + 2 * i * words_; }
    const std::uint64_t* hi(std::size_t i) const { return planes_.data() + (2 * i + 1) * words_; }

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    unsigned log2_ = 0;
    std::vector<std::uint8_t> radix_;
    std::vector<std::uint64_t> planes_;
};

namespace detail {

inline void packed_add(std::uint64_t* lo, std::uint64_t* hi, const std::uint64_t* blo,
                       const std::uint64_t* bhi, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) {
        std::uint64_t carry = lo[i] & blo[i];
        lo[i] ^= blo[i];
        hi[i] ^= bhi[i] ^ carry;
    }
}

template <class State, class Visit>
void fold_range(const PackedBasis& b, std::uint64_t begin, std::uint64_t end, State& state, Visit& visit) {
    const std::size_t k = b.rows();
    const std::size_t w = b.words();
    std::vector<std::uint64_t> lo(w ? w : 1, 0), hi(w ? w : 1, 0);
    std::vector<std::uint8_t> digit(k, 0);
    std::uint64_t rest = begin;
    for (std::size_t i = 0; i < k; ++i) {
        digit[i] = static_cast<std::uint8_t>(rest % b.radix(i));
        rest /= b.radix(i);
        for (unsigned t = 0; t < digit[i]; ++t) packed_add(lo.data(), hi.data(), b.lo(i), b.hi(i), w);
    }
    PackedWord word{lo.data(), hi.data(), w};
    for (std::uint64_t c = begin; c < end; ++c) {
        visit(state, word);
        if (c + 1 == end) break;
        for (std::size_t i = 0; i < k; ++i) {
            packed_add(lo.data(), hi.data(), b.lo(i), b.hi(i), w);
            if (++digit[i] < b.radix(i)) break;
            digit[i] = 0;
        }
    }
}

} // namespace detail

// Visits every codeword once. Each thread folds a contiguous range of
// information tuples into its own copy of `init`; partial states are merged
// in range order, so the result does not depend on the thread count.
template <class State, class Visit, class Merge>
State fold_codewords(const PackedBasis& b, std::uint64_t cap, State init, Visit visit, Merge merge,
                     bool parallel = true) {
    if (b.log2_count() >= 63 || (std::uint64_t{1} << b.log2_count()) > cap)
        throw CapExceeded(b.log2_count(), cap);
    const std::uint64_t total = std::uint64_t{1} << b.log2_count();
    std::size_t threads = parallel ? worker_threads() : 1;
    const std::uint64_t min_chunk = 1 << 14;
    if (total / min_chunk + 1 < threads) threads = static_cast<std::size_t>(total / min_chunk + 1);
    if (threads <= 1) {
        detail::fold_range(b, 0, total, init, visit);
        return init;
    }
    std::vector<State> partial(threads, init);
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
        std::uint64_t lo = total / threads * t;
        std::uint64_t hi = t + 1 == threads ? total : total / threads * (t + 1);
        pool.emplace_back([&, t, lo, hi] {
            Visit local = visit;
            detail::fold_range(b, lo, hi, partial[t], local);
        });
    }
    for (auto& th : pool) th.join();
    State out = std::move(partial[0]);
    for (std::size_t t = 1; t < threads; ++t) merge(out, partial[t]);
    return out;
}

} // namespace z4v
