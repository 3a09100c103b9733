#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "z4v/z4_linalg.hpp"

namespace z4v {

enum class DualKind { euclidean, hermitian };

// C = vC1 + (1 - v)C2. The CRT pair is authoritative; the R-generator matrix
// is kept for display and for monomial maps.
class RCode {
public:
    RCode() = default;

    static RCode from_generators(const RMatrix& g);
    static RCode from_crt(Z4Code c1, Z4Code c2);

    std::size_t length() const { return n_; }
    const RMatrix& generators() const { return gens_; }
    const Z4Code& c1() const { return c1_; }
    const Z4Code& c2() const { return c2_; }

    unsigned log2_size() const { return c1_.log2_size() + c2_.log2_size(); }
    BigInt size() const { return BigInt(1) << log2_size(); }

    bool contains(std::span<const RElement> w) const;

    friend bool operator==(const RCode& a, const RCode& b) {
        return a.n_ == b.n_ && a.c1_ == b.c1_ && a.c2_ == b.c2_;
    }

private:
    std::size_t n_ = 0;
    RMatrix gens_;
    Z4Code c1_;
    Z4Code c2_;
};

RMatrix crt_generators(const Z4Code& c1, const Z4Code& c2);

Z4Vector gray_map(std::span<const RElement> w);
Z4Code gray_image(const RCode& c);

RCode dual(const RCode& c, DualKind kind = DualKind::euclidean);
RCode conjugate(const RCode& c);

enum class Duality { none, self_orthogonal, self_dual };
enum class SelfDualType { type_i, type_ii, not_applicable };

struct DualityReport {
    Duality duality = Duality::none;
    SelfDualType type = SelfDualType::not_applicable;
    int extremal_bound = 0;       // 8*floor(n/12)+8
    std::optional<int> d_e;       // set when C was enumerable under the cap
    bool extremal = false;
};

std::string_view duality_name(Duality d);
std::string_view type_name(SelfDualType t);

// Type II is decided from the generators of the Gray image: on a
// self-orthogonal Z4 code the Euclidean weight mod 8 is additive. d_E needs
// enumeration and is left empty above the cap.
DualityReport classify_duality(const RCode& c, std::uint64_t cap = default_cap);

// Minimum distance over the given metric. Hamming and Gray go through the CRT
// components, Euclidean enumerates C. nullopt for the zero code.
std::optional<int> min_distance(const RCode& c, Metric metric, std::uint64_t cap = default_cap);
std::optional<int> min_distance(const Z4Code& c, Metric metric, std::uint64_t cap = default_cap);

struct DistanceEstimate {
    int value = 0;
    std::uint64_t samples = 0;
    static constexpr const char* label = "upper_bound";
};

// Random codewords; never exact. nullopt for the zero code.
std::optional<DistanceEstimate> estimate_min_distance(const RCode& c, Metric metric, std::uint64_t samples,
                                                      std::uint64_t seed = 1);

struct SingletonReport {
    bool is_mds = false;
    bool is_mgds = false;
    double hamming_bound = 0;   // n - log16|C| + 1
    int gray_bound = 0;         // 2n - log2 min(|C1|,|C2|) + 1
    std::optional<int> d_h;
    std::optional<int> d_g;
};

SingletonReport singleton_report(const RCode& c, std::uint64_t cap = default_cap);

// out[j] = signs[j] * in[permutation[j]]
struct IsodualWitness {
    std::vector<std::size_t> permutation;
    RVector signs;

    RVector apply(std::span<const RElement> w) const;
};

RCode apply_monomial(const RCode& c, const IsodualWitness& w);
bool check_isodual(const RCode& c, const IsodualWitness& w);

RCode direct_product(const RCode& c, const RCode& d);

} // namespace z4v
