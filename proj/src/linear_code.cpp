#include "z4v/linear_code.hpp"

#include <algorithm>
#include <random>

#include "z4v/parallel.hpp"

namespace z4v {

RCode RCode::from_generators(const RMatrix& g) {
    const std::size_t n = g.cols();
    Z4Matrix x(g.rows(), n), y(g.rows(), n);
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            CrtPair p = crt_split(g(i, j));
            x(i, j) = p.x;
            y(i, j) = p.y;
        }
    RCode c;
    c.n_ = n;
    c.gens_ = g;
    c.c1_ = Z4Code(std::move(x));
    c.c2_ = Z4Code(std::move(y));
    return c;
}

RMatrix crt_generators(const Z4Code& c1, const Z4Code& c2) {
    const std::size_t n = c1.length();
    RMatrix g(0, n);
    RVector row(n);
    for (std::size_t i = 0; i < c1.basis().rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) row[j] = crt_join(c1.basis()(i, j), Z4(0));
        g.append_row(row);
    }
    for (std::size_t i = 0; i < c2.basis().rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) row[j] = crt_join(Z4(0), c2.basis()(i, j));
        g.append_row(row);
    }
    return g;
}

RCode RCode::from_crt(Z4Code c1, Z4Code c2) {
    if (c1.length() != c2.length()) throw LengthMismatch("CRT components differ in length");
    RCode c;
    c.n_ = c1.length();
    c.gens_ = crt_generators(c1, c2);
    c.c1_ = std::move(c1);
    c.c2_ = std::move(c2);
    return c;
}

bool RCode::contains(std::span<const RElement> w) const {
    if (w.size() != n_) throw LengthMismatch("vector length differs from code length");
    Z4Vector x(n_), y(n_);
    for (std::size_t j = 0; j < n_; ++j) {
        CrtPair p = crt_split(w[j]);
        x[j] = p.x;
        y[j] = p.y;
    }
    return c1_.contains(x) && c2_.contains(y);
}

Z4Vector gray_map(std::span<const RElement> w) {
    Z4Vector out(2 * w.size());
    for (std::size_t j = 0; j < w.size(); ++j) {
        auto [g0, g1] = gray_element(w[j]);
        out[2 * j] = g0;
        out[2 * j + 1] = g1;
    }
    return out;
}

Z4Code gray_image(const RCode& c) {
    const RMatrix& g = c.generators();
    Z4Matrix m(0, 2 * c.length());
    for (std::size_t i = 0; i < g.rows(); ++i) {
        RVector r = g.row_vector(i);
        m.append_row(gray_map(r));
        for (auto& e : r) e *= RElement::v();
        m.append_row(gray_map(r));
    }
    return Z4Code(std::move(m));
}

RCode conjugate(const RCode& c) {
    RMatrix g = c.generators();
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (auto& e : g.row(i)) e = conjugate(e);
    return RCode::from_generators(g);
}

RCode dual(const RCode& c, DualKind kind) {
    RCode e = RCode::from_crt(c.c1().dual(), c.c2().dual());
    return kind == DualKind::euclidean ? e : conjugate(e);
}

std::string_view duality_name(Duality d) {
    switch (d) {
    case Duality::none: return "none";
    case Duality::self_orthogonal: return "self_orthogonal";
    case Duality::self_dual: return "self_dual";
    }
    return "?";
}

std::string_view type_name(SelfDualType t) {
    switch (t) {
    case SelfDualType::type_i: return "type_i";
    case SelfDualType::type_ii: return "type_ii";
    case SelfDualType::not_applicable: return "not_applicable";
    }
    return "?";
}

namespace {

bool fits(unsigned log2_size, std::uint64_t cap) {
    return log2_size < 63 && (std::uint64_t{1} << log2_size) <= cap;
}

int z4_weight(const PackedWord& w, Metric m) {
    switch (m) {
    case Metric::hamming: return packed_hamming(w);
    case Metric::lee: return packed_lee(w);
    case Metric::euclidean: return packed_euclidean(w);
    case Metric::gray: break;
    }
    throw Error("Gray weight is defined on R, not on Z4");
}

// Weight of an R codeword read off its Gray image.
int gray_side_weight(const PackedWord& w, Metric m) {
    switch (m) {
    case Metric::hamming: return packed_pair_hamming(w);
    case Metric::gray: return packed_lee(w);
    case Metric::euclidean: return packed_euclidean(w);
    case Metric::lee: break;
    }
    throw Error("Lee weight is defined on Z4, not on R");
}

template <class WeightFn>
std::optional<int> min_nonzero(const Z4Code& c, std::uint64_t cap, WeightFn weight) {
    if (c.log2_size() == 0) return std::nullopt;
    PackedBasis b(c);
    constexpr int none = 1 << 30;
    int best = fold_codewords(
        b, cap, none,
        [weight](int& acc, const PackedWord& w) {
            int x = weight(w);
            if (x > 0 && x < acc) acc = x;
        },
        [](int& a, int& b2) { a = std::min(a, b2); });
    return best;
}

} // namespace

DualityReport classify_duality(const RCode& c, std::uint64_t cap) {
    DualityReport rep;
    rep.extremal_bound = 8 * static_cast<int>(c.length() / 12) + 8;
    if (!c.c1().is_self_orthogonal() || !c.c2().is_self_orthogonal()) return rep;
    rep.duality = Duality::self_orthogonal;
    if (c.log2_size() != 2 * c.length()) return rep;
    rep.duality = Duality::self_dual;

    Z4Code g = gray_image(c);
    bool doubly = true;
    for (std::size_t i = 0; i < g.canonical().rows(); ++i) {
        int w = 0;
        for (Z4 x : g.canonical().row(i)) w += euclidean_weight(x);
        if (w % 8 != 0) doubly = false;
    }
    rep.type = doubly ? SelfDualType::type_ii : SelfDualType::type_i;
    if (fits(g.log2_size(), cap)) {
        rep.d_e = min_nonzero(g, cap, [](const PackedWord& w) { return packed_euclidean(w); });
        rep.extremal = rep.type == SelfDualType::type_ii && rep.d_e && *rep.d_e == rep.extremal_bound;
    }
    return rep;
}

std::optional<int> min_distance(const Z4Code& c, Metric metric, std::uint64_t cap) {
    if (metric == Metric::gray) throw Error("Gray weight is defined on R, not on Z4");
    return min_nonzero(c, cap, [metric](const PackedWord& w) { return z4_weight(w, metric); });
}

std::optional<int> min_distance(const RCode& c, Metric metric, std::uint64_t cap) {
    if (metric == Metric::lee) throw Error("Lee weight is defined on Z4, not on R");
    if (metric == Metric::euclidean) {
        Z4Code g = gray_image(c);
        return min_nonzero(g, cap, [](const PackedWord& w) { return packed_euclidean(w); });
    }
    const Metric component = metric == Metric::gray ? Metric::lee : Metric::hamming;
    for (const Z4Code* z : {&c.c1(), &c.c2()})
        if (!fits(z->log2_size(), cap)) throw CapExceeded(z->log2_size(), cap);
    std::optional<int> d1 = min_distance(c.c1(), component, cap);
    std::optional<int> d2 = min_distance(c.c2(), component, cap);
    if (!d1) return d2;
    if (!d2) return d1;
    return std::min(*d1, *d2);
}

std::optional<DistanceEstimate> estimate_min_distance(const RCode& c, Metric metric, std::uint64_t samples,
                                                      std::uint64_t seed) {
    if (metric == Metric::lee) throw Error("Lee weight is defined on Z4, not on R");
    Z4Code g = gray_image(c);
    if (g.log2_size() == 0) return std::nullopt;
    PackedBasis b(g);
    const std::size_t words = b.words();
    std::vector<std::uint64_t> lo(words), hi(words);
    DistanceEstimate est{1 << 30, 0};
    auto consider = [&] {
        PackedWord w{lo.data(), hi.data(), words};
        int x = gray_side_weight(w, metric);
        if (x > 0 && x < est.value) est.value = x;
        ++est.samples;
    };
    for (std::size_t i = 0; i < b.rows(); ++i) {
        std::copy(b.lo(i), b.lo(i) + words, lo.begin());
        std::copy(b.hi(i), b.hi(i) + words, hi.begin());
        consider();
    }
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
        std::fill(lo.begin(), lo.end(), 0);
        std::fill(hi.begin(), hi.end(), 0);
        for (std::size_t i = 0; i < b.rows(); ++i) {
            unsigned t = static_cast<unsigned>(rng() % b.radix(i));
            for (unsigned k = 0; k < t; ++k) detail::packed_add(lo.data(), hi.data(), b.lo(i), b.hi(i), words);
        }
        consider();
    }
    return est;
}

SingletonReport singleton_report(const RCode& c, std::uint64_t cap) {
    SingletonReport rep;
    const int n = static_cast<int>(c.length());
    const int e = static_cast<int>(c.log2_size());
    rep.hamming_bound = n - e / 4.0 + 1;
    rep.gray_bound = 2 * n - static_cast<int>(std::min(c.c1().log2_size(), c.c2().log2_size())) + 1;
    rep.d_h = min_distance(c, Metric::hamming, cap);
    rep.d_g = min_distance(c, Metric::gray, cap);
    rep.is_mds = rep.d_h && 4 * *rep.d_h == 4 * n - e + 4;
    rep.is_mgds = rep.d_g && *rep.d_g == rep.gray_bound;
    return rep;
}

RVector IsodualWitness::apply(std::span<const RElement> w) const {
    RVector out(permutation.size());
    for (std::size_t j = 0; j < permutation.size(); ++j) out[j] = signs[j] * w[permutation[j]];
    return out;
}

RCode apply_monomial(const RCode& c, const IsodualWitness& w) {
    const std::size_t n = c.length();
    if (w.permutation.size() != n || w.signs.size() != n)
        throw DimensionMismatch("witness size differs from code length");
    std::vector<bool> seen(n, false);
    for (std::size_t p : w.permutation) {
        if (p >= n || seen[p]) throw DimensionMismatch("witness permutation is not a permutation");
        seen[p] = true;
    }
    for (RElement s : w.signs)
        if (!s.is_unit()) throw DimensionMismatch("witness sign " + to_string(s) + " is not a unit");
    const RMatrix& g = c.generators();
    RMatrix out(0, n);
    for (std::size_t i = 0; i < g.rows(); ++i) out.append_row(w.apply(g.row(i)));
    return RCode::from_generators(out);
}

bool check_isodual(const RCode& c, const IsodualWitness& w) { return apply_monomial(c, w) == dual(c); }

namespace {

Z4Code block_diagonal(const Z4Code& a, const Z4Code& b) {
    const std::size_t n = a.length(), m = b.length();
    Z4Matrix out(0, n + m);
    Z4Vector row(n + m);
    for (std::size_t i = 0; i < a.basis().rows(); ++i) {
        std::fill(row.begin(), row.end(), Z4(0));
        std::copy(a.basis().row(i).begin(), a.basis().row(i).end(), row.begin());
        out.append_row(row);
    }
    for (std::size_t i = 0; i < b.basis().rows(); ++i) {
        std::fill(row.begin(), row.end(), Z4(0));
        std::copy(b.basis().row(i).begin(), b.basis().row(i).end(), row.begin() + n);
        out.append_row(row);
    }
    return Z4Code(std::move(out));
}

} // namespace

RCode direct_product(const RCode& c, const RCode& d) {
    return RCode::from_crt(block_diagonal(c.c1(), d.c1()), block_diagonal(c.c2(), d.c2()));
}

} // namespace z4v
