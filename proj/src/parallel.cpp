#include "z4v/parallel.hpp"

#include <cstdlib>
#include <string>

namespace z4v {

std::size_t worker_threads() {
    if (const char* env = std::getenv("Z4V_THREADS")) {
        try {
            long v = std::stol(env);
            if (v >= 1) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

Z4Vector unpack(const PackedWord& w, std::size_t n) {
    Z4Vector out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = packed_at(w, j);
    return out;
}

PackedBasis::PackedBasis(const Z4Code& c) : n_(c.length()), words_((c.length() + 63) / 64) {
    const Z4Matrix& b = c.basis();
    radix_.reserve(b.rows());
    planes_.assign(2 * b.rows() * words_, 0);
    for (std::size_t i = 0; i < b.rows(); ++i) {
        radix_.push_back(i < c.k1() ? 4 : 2);
        std::uint64_t* l = planes_.data() + 2 * i * words_;
        std::uint64_t* h = l + words_;
        for (std::size_t j = 0; j < n_; ++j) {
            std::uint8_t x = b(i, j).value();
            if (x & 1) l[j >> 6] |= std::uint64_t{1} << (j & 63);
            if (x & 2) h[j >> 6] |= std::uint64_t{1} << (j & 63);
        }
    }
    log2_ = c.log2_size();
}

} // namespace z4v
