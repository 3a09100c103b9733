#include "z4v/cyclic.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace z4v {

namespace {

PolyZ4 one() { return PolyZ4::constant(Z4(1)); }

Z4Vector shifted_row(const PolyZ4& p, std::size_t n, std::size_t k) {
    Z4Vector row(n);
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) row[(i + k) % n] += c[i];
    return row;
}

RVector shifted_row(const PolyR& p, std::size_t n, std::size_t k) {
    RVector row(n);
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) row[(i + k) % n] += c[i];
    return row;
}

template <class V>
V rotate_right(std::span<const typename V::value_type> r) {
    V out(r.size());
    for (std::size_t j = 0; j < r.size(); ++j) out[(j + 1) % r.size()] = r[j];
    return out;
}

} // namespace

Z4Code cyclic_span(const std::vector<PolyZ4>& gens, std::size_t n) {
    Z4Matrix m(0, n);
    for (const auto& g : gens)
        for (std::size_t k = 0; k < n; ++k) m.append_row(shifted_row(g, n, k));
    return Z4Code(std::move(m));
}

RCode cyclic_span(const std::vector<PolyR>& gens, std::size_t n) {
    RMatrix m(0, n);
    for (const auto& g : gens)
        for (std::size_t k = 0; k < n; ++k) m.append_row(shifted_row(g, n, k));
    return RCode::from_generators(m);
}

bool is_cyclic(const Z4Code& c) {
    const Z4Matrix& g = c.canonical();
    for (std::size_t i = 0; i < g.rows(); ++i)
        if (!c.contains(rotate_right<Z4Vector>(g.row(i)))) return false;
    return true;
}

bool is_cyclic(const RCode& c) {
    const RMatrix& g = c.generators();
    for (std::size_t i = 0; i < g.rows(); ++i)
        if (!c.contains(rotate_right<RVector>(g.row(i)))) return false;
    return true;
}

Z4CyclicCode z4_cyclic(const PolyZ4& f, const PolyZ4& g, const PolyZ4& h, std::size_t n) {
    if (n % 2 == 0) throw EvenLength("length " + std::to_string(n) + " is even");
    PolyZ4 F = f.lift(), G = g.lift(), H = h.lift();
    if (!equal_up_to_unit(F * G * H, x_n_minus_one(n)))
        throw BadFactorization("f*g*h is not X^" + std::to_string(n) + "-1");
    Z4CyclicCode c;
    c.n = n;
    c.f = F;
    c.g = G;
    c.h = H;
    c.code = cyclic_span({F * G, Z4(2) * (F * H)}, n);
    return c;
}

RCyclicCode r_cyclic(Z4CyclicCode c1, Z4CyclicCode c2) {
    if (c1.n != c2.n) throw LengthMismatch("cyclic components differ in length");
    RCyclicCode r;
    r.n = c1.n;
    r.code = RCode::from_crt(c1.code, c2.code);
    r.c1 = std::move(c1);
    r.c2 = std::move(c2);
    return r;
}

FactorTable::FactorTable(std::size_t n) : n_(n), factors_(z4_factors(n)), cosets_(cyclotomic_cosets(n)) {
    coset_of_.assign(n, 0);
    for (std::size_t i = 0; i < cosets_.size(); ++i)
        for (std::size_t j : cosets_[i]) coset_of_[j] = i;
    partner_.resize(cosets_.size());
    for (std::size_t i = 0; i < cosets_.size(); ++i) partner_[i] = coset_of_[(n - cosets_[i].front()) % n];
}

bool FactorTable::is_primary(std::size_t i) const {
    const std::size_t j = partner_[i];
    if (i == j) return false;
    const auto& a = factors_[i].coeffs();
    const auto& b = factors_[j].coeffs();
    return std::lexicographical_compare(b.rbegin(), b.rend(), a.rbegin(), a.rend(),
                                        [](Z4 x, Z4 y) { return x.value() < y.value(); });
}

std::size_t FactorTable::reciprocal_pairs() const {
    std::size_t s = 0;
    for (std::size_t i = 0; i < size(); ++i)
        if (is_primary(i)) ++s;
    return s;
}

PolyZ4 FactorTable::product(const Assignment& a, Slot s) const {
    if (a.size() != size()) throw DimensionMismatch("assignment size differs from factor count");
    PolyZ4 p = one();
    for (std::size_t i = 0; i < size(); ++i)
        if (a[i] == s) p *= factors_[i];
    return p;
}

Z4CyclicCode FactorTable::component(const Assignment& a) const {
    return z4_cyclic(product(a, Slot::f), product(a, Slot::g), product(a, Slot::h), n_);
}

Assignment FactorTable::multiply(const Assignment& a, std::size_t m) const {
    if (std::gcd(m, n_) != 1) throw NotCoprime("multiplier " + std::to_string(m) + " is not a unit mod " + std::to_string(n_));
    Assignment out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[coset_of_[(cosets_[i].front() * m) % n_]] = a[i];
    return out;
}

std::vector<Assignment> FactorTable::selfdual_assignments(SelfDualFilter filter) const {
    std::vector<std::size_t> primaries;
    for (std::size_t i = 0; i < size(); ++i)
        if (is_primary(i)) primaries.push_back(i);
    const std::size_t choices = filter == SelfDualFilter::nontrivial ? 2 : 3;
    std::size_t total = 1;
    for (std::size_t k = 0; k < primaries.size(); ++k) total *= choices;

    std::vector<Assignment> out;
    for (std::size_t code = 0; code < total; ++code) {
        Assignment a(size(), Slot::g);
        bool all_g = true;
        std::size_t rest = code;
        for (std::size_t p : primaries) {
            std::size_t choice = rest % choices;
            rest /= choices;
            if (choice == 0) continue;
            all_g = false;
            a[p] = choice == 1 ? Slot::f : Slot::h;
            a[partner_[p]] = choice == 1 ? Slot::h : Slot::f;
        }
        if (filter != SelfDualFilter::all && all_g) continue;
        out.push_back(std::move(a));
    }
    if (filter != SelfDualFilter::orbit_representatives) return out;

    std::vector<Assignment> reps;
    for (const auto& a : out) {
        bool smallest = true;
        for (std::size_t m = 1; m < n_ && smallest; ++m)
            if (std::gcd(m, n_) == 1 && multiply(a, m) < a) smallest = false;
        if (smallest) reps.push_back(a);
    }
    return reps;
}

void for_each_cyclic(std::size_t n, const std::function<void(const RCyclicCode&)>& visit) {
    FactorTable t(n);
    std::size_t total = 1;
    for (std::size_t i = 0; i < t.size(); ++i) total *= 3;
    std::vector<Z4CyclicCode> comps;
    comps.reserve(total);
    for (std::size_t code = 0; code < total; ++code) {
        Assignment a(t.size());
        std::size_t rest = code;
        for (std::size_t i = 0; i < t.size(); ++i) {
            a[i] = static_cast<Slot>(rest % 3);
            rest /= 3;
        }
        comps.push_back(t.component(a));
    }
    for (std::size_t i = 0; i < total; ++i)
        for (std::size_t j = 0; j < total; ++j) visit(r_cyclic(comps[i], comps[j]));
}

std::vector<RCyclicCode> enumerate_cyclic(std::size_t n) {
    std::vector<RCyclicCode> out;
    for_each_cyclic(n, [&](const RCyclicCode& c) { out.push_back(c); });
    return out;
}

bool selfdual_cyclic_exists(std::size_t n) {
    if (n % 2 == 0) throw EvenLength("length " + std::to_string(n) + " is even");
    if (n == 1) return false;
    std::size_t x = 1;
    for (unsigned j = 0; j < order_of_two(n); ++j) {
        if (x == n - 1) return false;
        x = (2 * x) % n;
    }
    return true;
}

std::vector<RCyclicCode> selfdual_cyclic(std::size_t n, SelfDualFilter filter) {
    FactorTable t(n);
    std::vector<Z4CyclicCode> comps;
    for (const auto& a : t.selfdual_assignments(filter)) comps.push_back(t.component(a));
    std::vector<RCyclicCode> out;
    for (const auto& c1 : comps)
        for (const auto& c2 : comps) out.push_back(r_cyclic(c1, c2));
    return out;
}

PolyR single_generator(const RCyclicCode& c) {
    const std::size_t n = c.n;
    PolyZ4 x = (c.c1.f * c.c1.g + Z4(2) * c.c1.f).reduce(n);
    PolyZ4 y = (c.c2.f * c.c2.g + Z4(2) * c.c2.f).reduce(n);
    return crt_join(x, y);
}

PolyR generating_idempotent(const RCyclicCode& c) {
    auto component = [&](const Z4CyclicCode& z) {
        if (z.g.degree() != 0)
            throw NotFree("component with g = " + to_string(z.g) + " is not free and has no generating idempotent");
        return bezout_idempotent(z.h, z.f, c.n);
    };
    return crt_join(component(c.c1), component(c.c2));
}

PolyR dual_idempotent(const PolyR& e) {
    if (!e.is_modular()) throw ModulusMismatch("idempotent must be reduced mod X^n - 1");
    if (!(e * e == e)) throw NotIdempotent(to_string(e) + " is not idempotent");
    return PolyR::constant(RElement(1), e.modulus()) - e.eval_shift();
}

} // namespace z4v
