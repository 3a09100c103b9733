#pragma once

#include <vector>

#include "z4v/linear_code.hpp"

namespace z4v {

struct IsodualConstruction {
    RMatrix generator; // [I | M]
    RCode code;
    IsodualWitness witness; // maps code onto its Euclidean dual
};

// Row i is row i-1 shifted right by one.
RMatrix circulant(std::span<const RElement> first_row);

IsodualConstruction construction_a(const RMatrix& m);
IsodualConstruction construction_b(std::span<const RElement> first_row);

// [[alpha, beta ... beta], [gamma, circulant(core_row)] ...], gamma = +-beta.
class BorderedCirculant {
public:
    BorderedCirculant(RElement alpha, RElement beta, RElement gamma, RVector core_row);

    RElement alpha() const { return alpha_; }
    RElement beta() const { return beta_; }
    RElement gamma() const { return gamma_; }
    const RVector& core_row() const { return core_; }
    std::size_t size() const { return core_.size() + 1; }
    RMatrix matrix() const;

private:
    RElement alpha_, beta_, gamma_;
    RVector core_;
};

IsodualConstruction construction_c(const BorderedCirculant& b);

inline constexpr std::size_t nu_limit = 8;  // binary length for nu
inline constexpr std::size_t mu_limit = 12; // binary length for mu

// nu[k]: [n, k] doubly-even self-orthogonal binary codes.
std::vector<BigInt> nu_counts(std::size_t n);
// mu[k]: [N, k] doubly-even self-orthogonal binary codes containing all-ones.
std::vector<BigInt> mu_counts(std::size_t big_n);

// (sum_k nu[n,k] 2^(k(k+1)/2))^2
BigInt count_selfdual(std::size_t n);
// 0 unless 4 | n; else sum_{k=0}^{N/2} mu[N,k] 2^(1 + k(k-1)/2) with N = 2n.
BigInt count_type2(std::size_t n);

inline constexpr std::size_t z4_search_limit = 5;
inline constexpr std::size_t r_search_limit = 2;

// Every self-dual Z4 code of length n, by search over self-orthogonal submodules.
std::vector<Z4Code> selfdual_z4_codes(std::size_t n);
// Pairs of the above.
std::vector<RCode> selfdual_r_codes(std::size_t n);
// Every self-dual R code, searching R-submodules of R^n directly.
std::vector<RCode> selfdual_r_codes_direct(std::size_t n);

} // namespace z4v
