#include "z4v/poly.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

namespace z4v {

PolyZ4 x_n_minus_one(std::size_t n) {
    std::vector<Z4> c(n + 1);
    c[0] = Z4(3);
    c[n] += Z4(1);
    return PolyZ4::free(std::move(c));
}

PolyZ4 reciprocal(const PolyZ4& f, bool monic) {
    const int d = f.degree();
    if (d < 0) return PolyZ4::free({});
    std::vector<Z4> c(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) c[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(d - i)];
    PolyZ4 r = PolyZ4::free(std::move(c));
    if (monic) {
        Z4 lead = r.leading();
        if (!lead.is_unit()) throw NonUnitLeadingCoeff("reciprocal of " + to_string(f) + " has non-unit leading coefficient");
        r = lead * r; // units of Z4 are their own inverses
    }
    return r;
}

bool equal_up_to_unit(const PolyZ4& f, const PolyZ4& g) { return f == g || f == Z4(3) * g; }

std::pair<PolyZ4, PolyZ4> divmod(const PolyZ4& a, const PolyZ4& b) {
    const int db = b.degree();
    if (db < 0 || !b.leading().is_unit()) throw NonUnitLeadingCoeff("divisor " + to_string(b) + " is not monic up to a unit");
    const Z4 inv = b.leading();
    std::vector<Z4> r = a.lift().coeffs();
    const int da = a.lift().degree();
    std::vector<Z4> q(da >= db ? static_cast<std::size_t>(da - db) + 1 : 0);
    for (int k = da; k >= db; --k) {
        Z4 t = r[static_cast<std::size_t>(k)] * inv;
        if (t.is_zero()) continue;
        q[static_cast<std::size_t>(k - db)] = t;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= t * b[static_cast<std::size_t>(j)];
    }
    return {PolyZ4::free(std::move(q)), PolyZ4::free(std::move(r))};
}

PolyZ4 exact_quotient(const PolyZ4& a, const PolyZ4& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw NotAFactor(to_string(b) + " does not divide " + to_string(a));
    return q;
}

PolyR to_r(const PolyZ4& f) {
    std::vector<RElement> c(f.coeffs().begin(), f.coeffs().end());
    return f.is_modular() ? PolyR::modular(f.modulus(), c) : PolyR::free(std::move(c));
}

std::pair<PolyZ4, PolyZ4> crt_split(const PolyR& f) {
    std::vector<Z4> x, y;
    for (RElement r : f.coeffs()) {
        CrtPair p = crt_split(r);
        x.push_back(p.x);
        y.push_back(p.y);
    }
    if (f.is_modular()) return {PolyZ4::modular(f.modulus(), x), PolyZ4::modular(f.modulus(), y)};
    return {PolyZ4::free(std::move(x)), PolyZ4::free(std::move(y))};
}

PolyR crt_join(const PolyZ4& x, const PolyZ4& y) {
    if (x.modulus() != y.modulus()) throw ModulusMismatch("CRT components live in different quotient rings");
    std::size_t len = std::max(x.coeffs().size(), y.coeffs().size());
    std::vector<RElement> c(len);
    for (std::size_t i = 0; i < len; ++i) c[i] = crt_join(x[i], y[i]);
    return x.is_modular() ? PolyR::modular(x.modulus(), c) : PolyR::free(std::move(c));
}

PolyR conjugate(const PolyR& f) {
    std::vector<RElement> c;
    for (RElement r : f.coeffs()) c.push_back(conjugate(r));
    return f.is_modular() ? PolyR::modular(f.modulus(), c) : PolyR::free(std::move(c));
}

// ---- F2[x] ----

PolyF2 f2_trim(PolyF2 f) {
    for (auto& x : f) x &= 1;
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

PolyF2 f2_mul(const PolyF2& a, const PolyF2& b) {
    if (a.empty() || b.empty()) return {};
    PolyF2 c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (std::size_t j = 0; j < b.size(); ++j) c[i + j] ^= b[j];
    return f2_trim(std::move(c));
}

std::pair<PolyF2, PolyF2> f2_divmod(const PolyF2& a, const PolyF2& b) {
    PolyF2 bb = f2_trim(b);
    if (bb.empty()) throw Error("division by the zero binary polynomial");
    PolyF2 r = f2_trim(a);
    if (r.size() < bb.size()) return {{}, r};
    PolyF2 q(r.size() - bb.size() + 1, 0);
    for (std::size_t k = r.size(); k-- >= bb.size();) {
        if (!r[k]) continue;
        std::size_t s = k + 1 - bb.size();
        q[s] = 1;
        for (std::size_t j = 0; j < bb.size(); ++j) r[s + j] ^= bb[j];
    }
    return {f2_trim(std::move(q)), f2_trim(std::move(r))};
}

PolyF2 f2_gcd(PolyF2 a, PolyF2 b) {
    a = f2_trim(std::move(a));
    b = f2_trim(std::move(b));
    while (!b.empty()) {
        PolyF2 r = f2_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

namespace {

PolyF2 f2_add(const PolyF2& a, const PolyF2& b) {
    PolyF2 c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] ^= a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] ^= b[i];
    return f2_trim(std::move(c));
}

// s*a + t*b = gcd(a, b)
PolyF2 f2_bezout(const PolyF2& a, const PolyF2& b, PolyF2& s, PolyF2& t) {
    PolyF2 r0 = f2_trim(a), r1 = f2_trim(b);
    PolyF2 s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = f2_divmod(r0, r1);
        PolyF2 s2 = f2_add(s0, f2_mul(q, s1));
        PolyF2 t2 = f2_add(t0, f2_mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    s = s0;
    t = t0;
    return r0;
}

} // namespace

PolyF2 mod2(const PolyZ4& f) {
    PolyF2 c;
    for (Z4 x : f.coeffs()) c.push_back(x.value() & 1);
    return f2_trim(std::move(c));
}

PolyZ4 lift01(const PolyF2& f) {
    std::vector<Z4> c;
    for (auto x : f) c.push_back(Z4(x & 1));
    return PolyZ4::free(std::move(c));
}

std::string to_string(const PolyF2& f) {
    if (f.empty()) return "0";
    std::string out;
    for (std::size_t i = f.size(); i-- > 0;) {
        if (!f[i]) continue;
        if (!out.empty()) out += "+";
        if (i == 0) out += "1";
        else if (i == 1) out += "x";
        else out += "x^" + std::to_string(i);
    }
    return out;
}

// ---- cyclotomic cosets and GF(2^m) ----

unsigned order_of_two(std::size_t n) {
    if (n % 2 == 0) throw EvenLength("length " + std::to_string(n) + " is even");
    if (n == 1) return 1;
    unsigned m = 1;
    std::size_t x = 2 % n;
    while (x != 1) {
        x = (2 * x) % n;
        ++m;
    }
    return m;
}

std::vector<std::vector<std::size_t>> cyclotomic_cosets(std::size_t n) {
    if (n % 2 == 0) throw EvenLength("length " + std::to_string(n) + " is even");
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> coset;
        std::size_t x = s;
        do {
            seen[x] = true;
            coset.push_back(x);
            x = (2 * x) % n;
        } while (x != s);
        std::sort(coset.begin(), coset.end());
        out.push_back(std::move(coset));
    }
    return out;
}

namespace {

// Primitive defining polynomials for GF(2^m), bit i = coefficient of x^i.
constexpr std::array<std::uint32_t, 17> gf_modulus{0,      0x3,    0x7,    0xB,    0x13,   0x25,
                                                   0x43,   0x83,   0x11D,  0x211,  0x409,  0x805,
                                                   0x1053, 0x201B, 0x4443, 0x8003, 0x1100B};

class Gf2m {
public:
    explicit Gf2m(unsigned m) : m_(m), mod_(gf_modulus[m]) {}

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t r = 0;
        while (b) {
            if (b & 1) r ^= a;
            b >>= 1;
            a <<= 1;
            if (a >> m_) a ^= mod_;
        }
        return r;
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint32_t size() const { return std::uint32_t{1} << m_; }

private:
    unsigned m_;
    std::uint32_t mod_;
};

std::vector<std::size_t> prime_divisors(std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) out.push_back(n);
    return out;
}

} // namespace

std::vector<PolyF2> factor_binary(std::size_t n, std::size_t limit) {
    if (n % 2 == 0) throw EvenLength("length " + std::to_string(n) + " is even");
    if (n > limit) throw LimitExceeded("length " + std::to_string(n) + " exceeds the factorization limit " + std::to_string(limit));
    if (n == 1) return {PolyF2{1, 1}};
    const unsigned m = order_of_two(n);
    if (m >= gf_modulus.size())
        throw LimitExceeded("x^" + std::to_string(n) + "+1 needs GF(2^" + std::to_string(m) + "), above GF(2^16)");
    Gf2m gf(m);
    const std::uint64_t group = gf.size() - 1;
    const auto primes = prime_divisors(n);
    std::uint32_t beta = 0;
    for (std::uint32_t g = 2; g < gf.size() && !beta; ++g) {
        std::uint32_t b = gf.pow(g, group / n);
        bool exact = std::all_of(primes.begin(), primes.end(), [&](std::size_t q) { return gf.pow(b, n / q) != 1; });
        if (exact) beta = b;
    }
    if (!beta) throw Error("no element of order " + std::to_string(n) + " found");

    std::vector<PolyF2> out;
    for (const auto& coset : cyclotomic_cosets(n)) {
        std::vector<std::uint32_t> poly{1};
        for (std::size_t j : coset) {
            std::uint32_t root = gf.pow(beta, j);
            std::vector<std::uint32_t> next(poly.size() + 1, 0);
            for (std::size_t i = 0; i < poly.size(); ++i) {
                next[i + 1] ^= poly[i];
                next[i] ^= gf.mul(poly[i], root);
            }
            poly = std::move(next);
        }
        PolyF2 f;
        for (std::uint32_t c : poly) {
            if (c > 1) throw Error("minimal polynomial has coefficients outside F2");
            f.push_back(static_cast<std::uint8_t>(c));
        }
        out.push_back(f2_trim(std::move(f)));
    }
    return out;
}

PolyZ4 hensel_lift(const PolyF2& f2, std::size_t n) {
    if (n == 0) throw ModulusMismatch("modulus X^0 - 1 is not allowed");
    PolyF2 f = f2_trim(f2);
    if (f.empty()) throw NotAFactor("zero polynomial");
    const PolyF2 xn = mod2(x_n_minus_one(n));
    if (!f2_divmod(xn, f).second.empty()) throw NotAFactor(to_string(f) + " does not divide x^" + std::to_string(n) + "+1");
    std::vector<Z4> e(f.size()), o(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) (i % 2 ? o : e)[i] = Z4(f[i]);
    PolyZ4 E = PolyZ4::free(e), O = PolyZ4::free(o);
    PolyZ4 g = E * E - O * O;
    std::vector<Z4> c;
    for (std::size_t i = 0; i < g.coeffs().size(); i += 2) c.push_back(g[i]);
    PolyZ4 lift = PolyZ4::free(std::move(c));
    if (lift.leading() == Z4(3)) lift = Z4(3) * lift;
    if (!divmod(x_n_minus_one(n), lift).second.is_zero())
        throw NotAFactor("lift of " + to_string(f) + " does not divide X^" + std::to_string(n) + "-1");
    return lift;
}

std::vector<PolyZ4> z4_factors(std::size_t n, std::size_t limit) {
    std::vector<PolyZ4> out;
    for (const auto& f : factor_binary(n, limit)) out.push_back(hensel_lift(f, n));
    return out;
}

PolyZ4 bezout_idempotent(const PolyZ4& a, const PolyZ4& b, std::size_t n) {
    if (n == 0) throw ModulusMismatch("modulus X^0 - 1 is not allowed");
    PolyF2 a2 = mod2(a), b2 = mod2(b);
    const PolyF2 xn = mod2(x_n_minus_one(n));
    PolyF2 s, t;
    PolyF2 g = f2_bezout(a2, b2, s, t);
    if (g != PolyF2{1}) throw NotCoprime(to_string(a) + " and " + to_string(b) + " are not coprime mod 2");
    if (f2_mul(a2, b2) != xn)
        throw BadFactorization(to_string(a) + " * " + to_string(b) + " is not X^" + std::to_string(n) + "-1");
    PolyZ4 e = lift01(f2_mul(t, b2)).reduce(n);
    PolyZ4 three = PolyZ4::constant(Z4(3), n);
    e = e * e * (three - Z4(2) * e);
    if (!(e * e == e)) throw NotIdempotent("idempotent lift failed");
    return e;
}

// ---- text ----

namespace {

template <class T>
std::string poly_string(const Poly<T>& f) {
    std::string out;
    const auto& c = f.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == T{}) continue;
        if (!out.empty()) out += " + ";
        std::string k = to_string(c[i]);
        if (i == 0) {
            out += k;
            continue;
        }
        if (k != "1") out += k.find('+') != std::string::npos ? "(" + k + ")" : k;
        out += "X";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

template <class T, class ParseCoeff>
Poly<T> parse_poly(std::string_view s, std::size_t n, ParseCoeff parse_coeff) {
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    if (t.empty()) throw ParseError("empty polynomial");
    auto fail = [&] { return ParseError("bad polynomial '" + std::string(s) + "'"); };
    std::vector<T> c;
    std::size_t i = 0;
    bool first = true;
    while (i < t.size()) {
        bool neg = false;
        if (t[i] == '+' || t[i] == '-') {
            neg = t[i] == '-';
            ++i;
        } else if (!first) {
            throw fail();
        }
        first = false;
        T coeff = T(1);
        bool have = false;
        if (i < t.size() && t[i] == '(') {
            std::size_t close = t.find(')', i);
            if (close == std::string::npos) throw fail();
            coeff = parse_coeff(std::string_view(t).substr(i + 1, close - i - 1));
            i = close + 1;
            have = true;
        } else {
            std::size_t j = i;
            while (j < t.size() && (std::isdigit(static_cast<unsigned char>(t[j])) || t[j] == 'v' || t[j] == 'V')) ++j;
            if (j > i) {
                coeff = parse_coeff(std::string_view(t).substr(i, j - i));
                i = j;
                have = true;
            }
        }
        if (i < t.size() && t[i] == '*') ++i;
        std::size_t power = 0;
        if (i < t.size() && (t[i] == 'X' || t[i] == 'x')) {
            ++i;
            power = 1;
            if (i < t.size() && t[i] == '^') {
                std::size_t j = ++i;
                while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
                if (j == i) throw fail();
                power = std::stoul(t.substr(i, j - i));
                i = j;
            }
        } else if (!have) {
            throw fail();
        }
        if (c.size() <= power) c.resize(power + 1);
        c[power] += neg ? -coeff : coeff;
    }
    return n ? Poly<T>::modular(n, c) : Poly<T>::free(std::move(c));
}

} // namespace

std::string to_string(const PolyZ4& f) { return poly_string(f); }
std::string to_string(const PolyR& f) { return poly_string(f); }

PolyZ4 parse_poly_z4(std::string_view s, std::size_t n) {
    return parse_poly<Z4>(s, n, [](std::string_view x) { return parse_z4(x); });
}

PolyR parse_poly_r(std::string_view s, std::size_t n) {
    return parse_poly<RElement>(s, n, [](std::string_view x) { return parse_element(x); });
}

} // namespace z4v
