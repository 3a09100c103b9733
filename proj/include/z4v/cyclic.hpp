#pragma once

#include <functional>
#include <vector>

#include "z4v/linear_code.hpp"
#include "z4v/poly.hpp"

namespace z4v {

// Cyclic Z4 code (fg) + (2fh) with fgh = X^n - 1.
struct Z4CyclicCode {
    std::size_t n = 0;
    PolyZ4 f, g, h;
    Z4Code code;
};

Z4CyclicCode z4_cyclic(const PolyZ4& f, const PolyZ4& g, const PolyZ4& h, std::size_t n);

struct RCyclicCode {
    std::size_t n = 0;
    Z4CyclicCode c1; // v-component
    Z4CyclicCode c2; // (1 - v)-component
    RCode code;
};

RCyclicCode r_cyclic(Z4CyclicCode c1, Z4CyclicCode c2);

// Span of all cyclic shifts of the given polynomials.
Z4Code cyclic_span(const std::vector<PolyZ4>& gens, std::size_t n);
RCode cyclic_span(const std::vector<PolyR>& gens, std::size_t n);

// T(C) = C, checked on generators.
bool is_cyclic(const Z4Code& c);
bool is_cyclic(const RCode& c);

enum class Slot : std::uint8_t { f, g, h };
using Assignment = std::vector<Slot>; // one slot per basic irreducible factor

enum class SelfDualFilter {
    all,                   // every self-dual cyclic code, the trivial one included
    nontrivial,            // each reciprocal pair either in g or with its primary member in f; no component all-g
    orbit_representatives, // one component per multiplier orbit, no component all-g
};

// The basic irreducible factors of X^n - 1 over Z4, indexed like the
// 2-cyclotomic cosets mod n.
class FactorTable {
public:
    explicit FactorTable(std::size_t n);

    std::size_t n() const { return n_; }
    std::size_t size() const { return factors_.size(); }
    const std::vector<PolyZ4>& factors() const { return factors_; }
    const std::vector<std::vector<std::size_t>>& cosets() const { return cosets_; }

    // Index of the factor equal to factor(i)* up to a unit.
    std::size_t partner(std::size_t i) const { return partner_[i]; }
    // Of a reciprocal pair, the member whose coefficients read from the top
    // degree down are lexicographically larger.
    bool is_primary(std::size_t i) const;
    std::size_t reciprocal_pairs() const;

    PolyZ4 product(const Assignment& a, Slot s) const;
    Z4CyclicCode component(const Assignment& a) const;

    // Image of an assignment under X -> X^m, gcd(m, n) = 1.
    Assignment multiply(const Assignment& a, std::size_t m) const;

    // Component assignments with f = h* and g = g*.
    std::vector<Assignment> selfdual_assignments(SelfDualFilter filter) const;

private:
    std::size_t n_;
    std::vector<PolyZ4> factors_;
    std::vector<std::vector<std::size_t>> cosets_;
    std::vector<std::size_t> coset_of_;
    std::vector<std::size_t> partner_;
};

// All 9^r cyclic codes, component assignments varying lexicographically.
void for_each_cyclic(std::size_t n, const std::function<void(const RCyclicCode&)>& visit);
std::vector<RCyclicCode> enumerate_cyclic(std::size_t n);

// True iff no power of 2 is -1 mod n.
bool selfdual_cyclic_exists(std::size_t n);
std::vector<RCyclicCode> selfdual_cyclic(std::size_t n, SelfDualFilter filter = SelfDualFilter::nontrivial);

// v(f1 g1 + 2 f1) + (1 - v)(f2 g2 + 2 f2)
PolyR single_generator(const RCyclicCode& c);

// Idempotents exist only when both components are free (g = 1); otherwise
// NotFree is thrown.
PolyR generating_idempotent(const RCyclicCode& c);
// 1 - e(X^-1)
PolyR dual_idempotent(const PolyR& e);

} // namespace z4v
