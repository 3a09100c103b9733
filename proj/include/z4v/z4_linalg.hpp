#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "z4v/matrix.hpp"

namespace z4v {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t default_cap = std::uint64_t{1} << 26;

struct StandardForm {
    // [[I_k1, A, B], [0, 2I_k2, 2C]]; column c of `matrix` is original column perm[c].
    Z4Matrix matrix;
    std::size_t k1 = 0;
    std::size_t k2 = 0;
    std::vector<std::size_t> perm;
};

StandardForm standard_form(const Z4Matrix& m);

// Echelon form with pivots 1 or 2, entries above a pivot reduced below it,
// and 2*row added for every pivot-2 row. Unique per row space.
Z4Matrix howell_form(const Z4Matrix& m);

class Z4Code {
public:
    Z4Code() = default;
    explicit Z4Code(Z4Matrix generators);
    Z4Code(std::size_t n, const std::vector<Z4Vector>& rows);

    static Z4Code zero(std::size_t n);
    static Z4Code full(std::size_t n);

    std::size_t length() const { return n_; }
    const Z4Matrix& generators() const { return gens_; }
    const Z4Matrix& canonical() const { return canon_; }
    const StandardForm& standard() const { return std_; }

    std::size_t k1() const { return std_.k1; }
    std::size_t k2() const { return std_.k2; }
    unsigned log2_size() const { return static_cast<unsigned>(2 * std_.k1 + std_.k2); }
    BigInt size() const { return BigInt(1) << log2_size(); }

    // Rows of the standard form in original coordinates: k1 rows of order 4,
    // then k2 rows of order 2.
    const Z4Matrix& basis() const { return basis_; }

    bool contains(std::span<const Z4> w) const;
    Z4Code dual() const;
    bool is_self_orthogonal() const;

    friend bool operator==(const Z4Code& a, const Z4Code& b) {
        return a.n_ == b.n_ && a.canon_ == b.canon_;
    }

private:
    std::size_t n_ = 0;
    Z4Matrix gens_;
    Z4Matrix canon_;
    StandardForm std_;
    Z4Matrix basis_;
};

// Every codeword exactly once. Order: lexicographic over information tuples,
// the order-4 coefficients varying fastest.
std::vector<Z4Vector> enumerate_codewords(const Z4Code& c, std::uint64_t cap = default_cap);

Z4Matrix stack(const Z4Matrix& top, const Z4Matrix& bottom);
Z4Matrix transpose(const Z4Matrix& m);

} // namespace z4v
