#include "z4v/weight_enum.hpp"

#include <sstream>
#include <vector>

#include "z4v/parallel.hpp"

namespace z4v {

BigInt WeightDistribution::total() const {
    BigInt s = 0;
    for (const auto& [w, c] : coeffs) s += c;
    return s;
}

BigInt WeightDistribution::at(int w) const {
    auto it = coeffs.find(w);
    return it == coeffs.end() ? BigInt(0) : it->second;
}

std::size_t length_scale(Metric m, std::size_t n, bool over_r) {
    switch (m) {
    case Metric::hamming: return n;
    case Metric::lee: return 2 * n;
    case Metric::gray: return 4 * n;
    case Metric::euclidean: return over_r ? 8 * n : 4 * n;
    }
    return n;
}

namespace {

using Histogram = std::vector<std::uint64_t>;

template <class WeightFn>
WeightDistribution histogram(const Z4Code& walk, Metric m, std::size_t n, std::size_t scale, std::uint64_t cap,
                             WeightFn weight) {
    PackedBasis b(walk);
    Histogram h = fold_codewords(
        b, cap, Histogram(scale + 1, 0), [weight](Histogram& acc, const PackedWord& w) { ++acc[weight(w)]; },
        [](Histogram& a, Histogram& o) {
            for (std::size_t i = 0; i < a.size(); ++i) a[i] += o[i];
        });
    WeightDistribution d{m, n, scale, {}};
    for (std::size_t w = 0; w < h.size(); ++w)
        if (h[w]) d.coeffs[static_cast<int>(w)] = h[w];
    return d;
}

} // namespace

WeightDistribution distribution(const RCode& c, Metric m, std::uint64_t cap) {
    const std::size_t n = c.length();
    const Z4Code g = gray_image(c);
    switch (m) {
    case Metric::hamming:
        return histogram(g, m, n, n, cap, [](const PackedWord& w) { return packed_pair_hamming(w); });
    case Metric::gray:
        return histogram(g, m, n, 4 * n, cap, [](const PackedWord& w) { return packed_lee(w); });
    case Metric::euclidean:
        return histogram(g, m, n, 8 * n, cap, [](const PackedWord& w) { return packed_euclidean(w); });
    case Metric::lee: break;
    }
    throw Error("Lee weight is defined on Z4, not on R");
}

WeightDistribution distribution(const Z4Code& c, Metric m, std::uint64_t cap) {
    const std::size_t n = c.length();
    switch (m) {
    case Metric::hamming:
        return histogram(c, m, n, n, cap, [](const PackedWord& w) { return packed_hamming(w); });
    case Metric::lee:
        return histogram(c, m, n, 2 * n, cap, [](const PackedWord& w) { return packed_lee(w); });
    case Metric::euclidean:
        return histogram(c, m, n, 4 * n, cap, [](const PackedWord& w) { return packed_euclidean(w); });
    case Metric::gray: break;
    }
    throw Error("Gray weight is defined on R, not on Z4");
}

CompleteEnumerator complete_enumerator(const RCode& c, std::uint64_t cap) {
    using Terms = std::map<CweExponents, std::uint64_t>;
    const std::size_t n = c.length();
    PackedBasis b(gray_image(c));
    Terms t = fold_codewords(
        b, cap, Terms{},
        [n](Terms& acc, const PackedWord& w) {
            CweExponents e{};
            for (std::size_t j = 0; j < n; ++j) {
                Z4 a = packed_at(w, 2 * j);
                Z4 apb = packed_at(w, 2 * j + 1);
                ++e[RElement(a, apb - a).index()];
            }
            ++acc[e];
        },
        [](Terms& a, Terms& o) {
            for (const auto& [k, v] : o) a[k] += v;
        });
    CompleteEnumerator out{n, {}};
    for (const auto& [k, v] : t) out.terms[k] = v;
    return out;
}

SymmetrizedEnumerator symmetrize(const CompleteEnumerator& cwe) {
    SymmetrizedEnumerator out{cwe.n, {}};
    for (const auto& [e, count] : cwe.terms) {
        SweExponents s{};
        for (int slot = 0; slot < 16; ++slot) s[weight(RElement::from_index(slot), Metric::gray)] += e[slot];
        out.terms[s] += count;
    }
    return out;
}

WeightDistribution specialize(const SymmetrizedEnumerator& swe, Metric target) {
    if (target != Metric::gray && target != Metric::hamming)
        throw Error("symmetrized enumerators specialize to gray or hamming only");
    WeightDistribution d{target, swe.n, length_scale(target, swe.n, true), {}};
    for (const auto& [s, count] : swe.terms) {
        int w = target == Metric::gray ? static_cast<int>(s[1] + 2 * s[2] + 3 * s[3] + 4 * s[4])
                                       : static_cast<int>(swe.n - s[0]);
        d.coeffs[w] += count;
    }
    return d;
}

namespace {

std::map<int, BigInt> binary_transform(const WeightDistribution& d, std::size_t degree, const BigInt& size) {
    if (size <= 0) throw NonIntegerTransform("code size must be positive");
    std::vector<std::vector<BigInt>> binom(degree + 1);
    for (std::size_t i = 0; i <= degree; ++i) {
        binom[i].assign(i + 1, 1);
        for (std::size_t k = 1; k < i; ++k) binom[i][k] = binom[i - 1][k - 1] + binom[i - 1][k];
    }
    auto C = [&](std::size_t a, long b) -> BigInt {
        if (b < 0 || static_cast<std::size_t>(b) > a) return 0;
        return binom[a][static_cast<std::size_t>(b)];
    };
    std::map<int, BigInt> out;
    for (std::size_t j = 0; j <= degree; ++j) {
        BigInt acc = 0;
        for (const auto& [i, a] : d.coeffs) {
            if (i < 0 || static_cast<std::size_t>(i) > degree)
                throw NonIntegerTransform("weight " + std::to_string(i) + " outside the length scale");
            const std::size_t ui = static_cast<std::size_t>(i);
            BigInt k = 0;
            for (std::size_t s = 0; s <= std::min(ui, j); ++s) {
                BigInt term = C(ui, static_cast<long>(s)) * C(degree - ui, static_cast<long>(j - s));
                if (s & 1) k -= term; else k += term;
            }
            acc += a * k;
        }
        if (acc % size != 0 || acc < 0)
            throw NonIntegerTransform("transform coefficient at weight " + std::to_string(j) +
                                      " is not a non-negative integer");
        acc /= size;
        if (acc != 0) out[static_cast<int>(j)] = acc;
    }
    return out;
}

} // namespace

WeightDistribution macwilliams_gray(const WeightDistribution& d, const BigInt& code_size) {
    if (d.metric != Metric::gray) throw Error("macwilliams_gray expects a Gray distribution");
    WeightDistribution out{Metric::gray, d.n, 4 * d.n, binary_transform(d, 4 * d.n, code_size)};
    return out;
}

WeightDistribution macwilliams_lee(const WeightDistribution& d, const BigInt& code_size) {
    if (d.metric != Metric::lee) throw Error("macwilliams_lee expects a Lee distribution");
    WeightDistribution out{Metric::lee, d.n, 2 * d.n, binary_transform(d, 2 * d.n, code_size)};
    return out;
}

std::string to_poly_string(const WeightDistribution& d) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : d.coeffs) {
        if (!first) os << " + ";
        first = false;
        if (w == 0) {
            os << c;
            continue;
        }
        if (c != 1) os << c;
        os << 'y';
        if (w != 1) os << '^' << w;
    }
    if (first) os << '0';
    return os.str();
}

} // namespace z4v
