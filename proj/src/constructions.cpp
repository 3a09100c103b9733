#include "z4v/constructions.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace z4v {

RMatrix circulant(std::span<const RElement> first_row) {
    const std::size_t n = first_row.size();
    RMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = first_row[(j + n - i) % n];
    return m;
}

namespace {

RMatrix identity_beside(const RMatrix& m) {
    const std::size_t n = m.rows();
    RMatrix g(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        g(i, i) = RElement(1);
        for (std::size_t j = 0; j < n; ++j) g(i, n + j) = m(i, j);
    }
    return g;
}

// out[j] = -s_j in[n + pi(j)], out[n + j] = s_j in[pi(j)]
IsodualWitness half_swap(const std::vector<std::size_t>& pi, const RVector& s) {
    const std::size_t n = pi.size();
    IsodualWitness w;
    w.permutation.resize(2 * n);
    w.signs.resize(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        w.permutation[j] = n + pi[j];
        w.signs[j] = -s[j];
        w.permutation[n + j] = pi[j];
        w.signs[n + j] = s[j];
    }
    return w;
}

IsodualConstruction assemble(const RMatrix& m, const std::vector<std::size_t>& pi, const RVector& s) {
    IsodualConstruction c;
    c.generator = identity_beside(m);
    c.code = RCode::from_generators(c.generator);
    c.witness = half_swap(pi, s);
    return c;
}

} // namespace

IsodualConstruction construction_a(const RMatrix& m) {
    if (m.rows() != m.cols()) throw NotSymmetric("matrix is not square");
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!(m(i, j) == m(j, i))) throw NotSymmetric("matrix is not symmetric");
    std::vector<std::size_t> pi(n);
    for (std::size_t j = 0; j < n; ++j) pi[j] = j;
    return assemble(m, pi, RVector(n, RElement(1)));
}

IsodualConstruction construction_b(std::span<const RElement> first_row) {
    const std::size_t n = first_row.size();
    std::vector<std::size_t> pi(n);
    for (std::size_t j = 0; j < n; ++j) pi[j] = (n - j) % n;
    return assemble(circulant(first_row), pi, RVector(n, RElement(1)));
}

BorderedCirculant::BorderedCirculant(RElement alpha, RElement beta, RElement gamma, RVector core_row)
    : alpha_(alpha), beta_(beta), gamma_(gamma), core_(std::move(core_row)) {
    if (!(gamma == beta) && !(gamma == -beta))
        throw BadBorder("gamma " + to_string(gamma) + " is neither beta nor -beta (beta = " + to_string(beta) + ")");
}

RMatrix BorderedCirculant::matrix() const {
    const std::size_t n = size();
    RMatrix core = circulant(core_);
    RMatrix b(n, n);
    b(0, 0) = alpha_;
    for (std::size_t k = 1; k < n; ++k) {
        b(0, k) = beta_;
        b(k, 0) = gamma_;
        for (std::size_t l = 1; l < n; ++l) b(k, l) = core(k - 1, l - 1);
    }
    return b;
}

IsodualConstruction construction_c(const BorderedCirculant& b) {
    const std::size_t n = b.size();
    const std::size_t m = n - 1;
    std::vector<std::size_t> pi(n);
    pi[0] = 0;
    for (std::size_t k = 1; k < n; ++k) pi[k] = 1 + (m - (k - 1)) % m;
    RVector s(n, RElement(1));
    if (!(b.gamma() == b.beta()))
        for (std::size_t k = 1; k < n; ++k) s[k] = RElement(3);
    return assemble(b.matrix(), pi, s);
}

// ---- counting ----

namespace {

using Words = std::vector<std::uint32_t>; // sorted codewords

bool doubly_even(std::uint32_t x) { return std::popcount(x) % 4 == 0; }

std::vector<BigInt> level_counts(std::size_t len, bool with_ones) {
    const std::uint32_t all = len == 32 ? ~0u : (1u << len) - 1;
    std::vector<std::uint32_t> candidates;
    for (std::uint32_t x = 1; x <= all && x != 0; ++x)
        if (doubly_even(x)) candidates.push_back(x);

    std::vector<BigInt> counts(len / 2 + 1, 0);
    std::set<Words> level;
    std::size_t k = 0;
    if (with_ones) {
        if (!doubly_even(all)) return counts;
        level.insert(Words{0, all});
        k = 1;
    } else {
        level.insert(Words{0});
    }
    while (!level.empty()) {
        counts[k] = level.size();
        std::set<Words> next;
        for (const auto& code : level)
            for (std::uint32_t v : candidates) {
                if (std::binary_search(code.begin(), code.end(), v)) continue;
                bool orth = std::all_of(code.begin(), code.end(), [v](std::uint32_t c) { return std::popcount(c & v) % 2 == 0; });
                if (!orth) continue;
                Words grown = code;
                for (std::uint32_t c : code) grown.push_back(c ^ v);
                std::sort(grown.begin(), grown.end());
                next.insert(std::move(grown));
            }
        level = std::move(next);
        ++k;
    }
    return counts;
}

} // namespace

std::vector<BigInt> nu_counts(std::size_t n) {
    if (n > nu_limit) throw LimitExceeded("nu is searched only for n <= " + std::to_string(nu_limit));
    return level_counts(n, false);
}

std::vector<BigInt> mu_counts(std::size_t big_n) {
    if (big_n > mu_limit) throw LimitExceeded("mu is searched only for N <= " + std::to_string(mu_limit));
    return level_counts(big_n, true);
}

BigInt count_selfdual(std::size_t n) {
    auto nu = nu_counts(n);
    BigInt s = 0;
    for (std::size_t k = 0; k <= n / 2; ++k) s += nu[k] * (BigInt(1) << (k * (k + 1) / 2));
    return s * s;
}

BigInt count_type2(std::size_t n) {
    if (n % 4 != 0 || n == 0) return 0;
    const std::size_t big_n = 2 * n;
    auto mu = mu_counts(big_n);
    BigInt s = 0;
    for (std::size_t k = 0; k <= big_n / 2; ++k) s += mu[k] * (BigInt(1) << (1 + k * (k - 1) / 2));
    return s;
}

namespace {

// Closure search over submodules spanned by self-orthogonal vectors.
// Words are base-q indices; add(a, b), scale(r, a) and dot(a, b) act on them.
template <class Add, class Dot>
std::set<Words> self_orthogonal_closure(std::uint32_t space, const std::vector<std::uint32_t>& scalars, Add add,
                                        Dot dot_is_zero) {
    std::set<Words> seen{Words{0}};
    std::vector<Words> frontier{Words{0}};
    while (!frontier.empty()) {
        std::vector<Words> next;
        for (const auto& code : frontier)
            for (std::uint32_t w = 1; w < space; ++w) {
                if (std::binary_search(code.begin(), code.end(), w)) continue;
                if (!dot_is_zero(w, w)) continue;
                bool orth = std::all_of(code.begin(), code.end(), [&](std::uint32_t c) { return dot_is_zero(c, w); });
                if (!orth) continue;
                std::set<std::uint32_t> grown;
                for (std::uint32_t c : code)
                    for (std::uint32_t r : scalars) grown.insert(add(c, r, w));
                Words g(grown.begin(), grown.end());
                if (seen.insert(g).second) next.push_back(std::move(g));
            }
        frontier = std::move(next);
    }
    return seen;
}

std::vector<Z4> z4_digits(std::uint32_t x, std::size_t n) {
    std::vector<Z4> d(n);
    for (std::size_t j = 0; j < n; ++j, x >>= 2) d[j] = Z4(static_cast<int>(x & 3));
    return d;
}

std::uint32_t z4_index(const std::vector<Z4>& d) {
    std::uint32_t x = 0;
    for (std::size_t j = d.size(); j-- > 0;) x = (x << 2) | d[j].value();
    return x;
}

RVector r_digits(std::uint32_t x, std::size_t n) {
    RVector d(n);
    for (std::size_t j = 0; j < n; ++j, x >>= 4) d[j] = RElement::from_index(static_cast<int>(x & 15));
    return d;
}

std::uint32_t r_index(const RVector& d) {
    std::uint32_t x = 0;
    for (std::size_t j = d.size(); j-- > 0;) x = (x << 4) | static_cast<std::uint32_t>(d[j].index());
    return x;
}

} // namespace

std::vector<Z4Code> selfdual_z4_codes(std::size_t n) {
    if (n == 0 || n > z4_search_limit)
        throw LimitExceeded("Z4 self-dual search needs 1 <= n <= " + std::to_string(z4_search_limit));
    const std::uint32_t space = 1u << (2 * n);
    auto add = [n](std::uint32_t c, std::uint32_t r, std::uint32_t w) {
        auto a = z4_digits(c, n), b = z4_digits(w, n);
        for (std::size_t j = 0; j < n; ++j) a[j] += Z4(static_cast<int>(r)) * b[j];
        return z4_index(a);
    };
    auto orth = [n](std::uint32_t a, std::uint32_t b) { return dot(z4_digits(a, n), z4_digits(b, n)).is_zero(); };
    std::vector<Z4Code> out;
    for (const auto& code : self_orthogonal_closure(space, {0, 1, 2, 3}, add, orth)) {
        if (code.size() != (std::size_t{1} << n)) continue;
        Z4Matrix m(0, n);
        for (std::uint32_t c : code) m.append_row(z4_digits(c, n));
        out.emplace_back(std::move(m));
    }
    return out;
}

std::vector<RCode> selfdual_r_codes(std::size_t n) {
    auto z = selfdual_z4_codes(n);
    std::vector<RCode> out;
    for (const auto& a : z)
        for (const auto& b : z) out.push_back(RCode::from_crt(a, b));
    return out;
}

std::vector<RCode> selfdual_r_codes_direct(std::size_t n) {
    if (n == 0 || n > r_search_limit)
        throw LimitExceeded("R self-dual search needs 1 <= n <= " + std::to_string(r_search_limit));
    const std::uint32_t space = 1u << (4 * n);
    std::vector<std::uint32_t> scalars(16);
    for (std::uint32_t r = 0; r < 16; ++r) scalars[r] = r;
    auto add = [n](std::uint32_t c, std::uint32_t r, std::uint32_t w) {
        auto a = r_digits(c, n), b = r_digits(w, n);
        RElement s = RElement::from_index(static_cast<int>(r));
        for (std::size_t j = 0; j < n; ++j) a[j] += s * b[j];
        return r_index(a);
    };
    auto orth = [n](std::uint32_t a, std::uint32_t b) { return dot(r_digits(a, n), r_digits(b, n)).is_zero(); };
    std::vector<RCode> out;
    for (const auto& code : self_orthogonal_closure(space, scalars, add, orth)) {
        if (code.size() != (std::size_t{1} << (2 * n))) continue;
        RMatrix m(0, n);
        for (std::uint32_t c : code) m.append_row(r_digits(c, n));
        out.push_back(RCode::from_generators(m));
    }
    return out;
}

} // namespace z4v
