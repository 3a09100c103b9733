#pragma once

#include <array>
#include <map>
#include <string>

#include "z4v/linear_code.hpp"

namespace z4v {

struct WeightDistribution {
    Metric metric = Metric::hamming;
    std::size_t n = 0;            // code length (over R or over Z4)
    std::size_t length_scale = 0; // largest possible weight
    std::map<int, BigInt> coeffs; // zero counts are not stored

    BigInt total() const;
    BigInt at(int w) const;
    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

// R codes take hamming, gray or euclidean; Z4 codes take hamming, lee or euclidean.
WeightDistribution distribution(const RCode& c, Metric m, std::uint64_t cap = default_cap);
WeightDistribution distribution(const Z4Code& c, Metric m, std::uint64_t cap = default_cap);

std::size_t length_scale(Metric m, std::size_t n, bool over_r);

// Slots follow RElement::index(): 0,1,2,3,v,1+v,2+v,3+v,2v,...,3+3v.
using CweExponents = std::array<std::uint32_t, 16>;
using SweExponents = std::array<std::uint32_t, 5>;

struct CompleteEnumerator {
    std::size_t n = 0;
    std::map<CweExponents, BigInt> terms;
};

struct SymmetrizedEnumerator {
    std::size_t n = 0;
    std::map<SweExponents, BigInt> terms;
};

CompleteEnumerator complete_enumerator(const RCode& c, std::uint64_t cap = default_cap);
SymmetrizedEnumerator symmetrize(const CompleteEnumerator& cwe);
WeightDistribution specialize(const SymmetrizedEnumerator& swe, Metric target);

// Gray_{C-dual}(X, Y) = Gray_C(X + Y, X - Y) / |C|, exactly.
WeightDistribution macwilliams_gray(const WeightDistribution& d, const BigInt& code_size);
// The same transform for Lee distributions of Z4 codes (degree 2N).
WeightDistribution macwilliams_lee(const WeightDistribution& d, const BigInt& code_size);

// "1 + 6y^2 + 15y^4"
std::string to_poly_string(const WeightDistribution& d);

} // namespace z4v
