#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "z4v/errors.hpp"
#include "z4v/ring.hpp"

namespace z4v {

// Polynomials over Z4 or R. A free polynomial lives in T[X] and is stored
// trimmed; a modular one lives in T[X]/(X^n - 1) and stores exactly n
// coefficients. The mode is chosen at construction and never inferred.
template <class T>
class Poly {
public:
    Poly() = default;

    static Poly free(std::vector<T> c) {
        Poly p;
        p.c_ = std::move(c);
        p.trim();
        return p;
    }
    static Poly modular(std::size_t n, const std::vector<T>& c) {
        if (n == 0) throw ModulusMismatch("modulus X^0 - 1 is not allowed");
        Poly p;
        p.n_ = n;
        p.c_.assign(n, T{});
        for (std::size_t i = 0; i < c.size(); ++i) p.c_[i % n] += c[i];
        return p;
    }
    static Poly monomial(T coeff, std::size_t k, std::size_t n = 0) {
        std::vector<T> c(k + 1);
        c[k] = coeff;
        return n ? modular(n, c) : free(std::move(c));
    }
    static Poly constant(T x, std::size_t n = 0) { return monomial(x, 0, n); }

    bool is_modular() const { return n_ != 0; }
    std::size_t modulus() const { return n_; }
    const std::vector<T>& coeffs() const { return c_; }

    T operator[](std::size_t i) const { return i < c_.size() ? c_[i] : T{}; }

    // -1 for the zero polynomial.
    int degree() const {
        for (std::size_t i = c_.size(); i-- > 0;)
            if (!(c_[i] == T{})) return static_cast<int>(i);
        return -1;
    }
    bool is_zero() const { return degree() < 0; }
    T leading() const { int d = degree(); return d < 0 ? T{} : c_[static_cast<std::size_t>(d)]; }

    Poly reduce(std::size_t n) const { return modular(n, c_); }
    Poly lift() const { return free(c_); }

    // f(X^-1) = f(X^(n-1)) in the quotient ring.
    Poly eval_shift() const {
        require_modular();
        std::vector<T> c(n_);
        for (std::size_t i = 0; i < n_; ++i) c[(n_ - i) % n_] = c_[i];
        return modular(n_, c);
    }

    // X^k * f
    Poly shift(std::size_t k) const {
        std::vector<T> c(c_.size() + k);
        for (std::size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
        return n_ ? modular(n_, c) : free(std::move(c));
    }

    friend Poly operator+(const Poly& f, const Poly& g) {
        std::size_t n = common(f, g);
        std::vector<T> c(std::max(f.c_.size(), g.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = f[i] + g[i];
        return n ? modular(n, c) : free(std::move(c));
    }
    friend Poly operator-(const Poly& f, const Poly& g) { return f + (-g); }
    Poly operator-() const {
        Poly p = *this;
        for (auto& x : p.c_) x = -x;
        return p;
    }
    friend Poly operator*(const Poly& f, const Poly& g) {
        std::size_t n = common(f, g);
        if (f.c_.empty() || g.c_.empty()) return n ? modular(n, {}) : free({});
        std::vector<T> c(n ? n : f.c_.size() + g.c_.size() - 1);
        for (std::size_t i = 0; i < f.c_.size(); ++i) {
            if (f.c_[i] == T{}) continue;
            for (std::size_t j = 0; j < g.c_.size(); ++j) {
                std::size_t k = i + j;
                if (n) k %= n;
                c[k] += f.c_[i] * g.c_[j];
            }
        }
        return n ? modular(n, c) : free(std::move(c));
    }
    friend Poly operator*(T s, const Poly& f) {
        Poly p = f;
        for (auto& x : p.c_) x = s * x;
        if (!p.n_) p.trim();
        return p;
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& f, const Poly& g) { return f.n_ == g.n_ && f.c_ == g.c_; }

private:
    static std::size_t common(const Poly& f, const Poly& g) {
        if (f.n_ != g.n_) throw ModulusMismatch("polynomials live in different quotient rings");
        return f.n_;
    }
    void require_modular() const {
        if (!n_) throw ModulusMismatch("operation needs a polynomial reduced mod X^n - 1");
    }
    void trim() {
        while (!c_.empty() && c_.back() == T{}) c_.pop_back();
    }

    std::size_t n_ = 0;
    std::vector<T> c_;
};

using PolyZ4 = Poly<Z4>;
using PolyR = Poly<RElement>;

// X^n - 1 as a free polynomial.
PolyZ4 x_n_minus_one(std::size_t n);

// X^deg(f) f(1/X). With monic=true the result is scaled by the inverse of its
// leading coefficient.
PolyZ4 reciprocal(const PolyZ4& f, bool monic = false);

// f == g or f == 3g.
bool equal_up_to_unit(const PolyZ4& f, const PolyZ4& g);

// Division by a polynomial with unit leading coefficient, free mode.
std::pair<PolyZ4, PolyZ4> divmod(const PolyZ4& a, const PolyZ4& b);
// Throws NotAFactor when the division leaves a remainder.
PolyZ4 exact_quotient(const PolyZ4& a, const PolyZ4& b);

PolyR to_r(const PolyZ4& f);
std::pair<PolyZ4, PolyZ4> crt_split(const PolyR& f);
PolyR crt_join(const PolyZ4& x, const PolyZ4& y);
PolyR conjugate(const PolyR& f);

// Binary polynomials, ascending coefficients, trimmed.
using PolyF2 = std::vector<std::uint8_t>;

PolyF2 f2_trim(PolyF2 f);
PolyF2 f2_mul(const PolyF2& a, const PolyF2& b);
std::pair<PolyF2, PolyF2> f2_divmod(const PolyF2& a, const PolyF2& b);
PolyF2 f2_gcd(PolyF2 a, PolyF2 b);
PolyF2 mod2(const PolyZ4& f);
PolyZ4 lift01(const PolyF2& f);
std::string to_string(const PolyF2& f);

inline constexpr std::size_t default_factor_limit = 255;

// Multiplicative order of 2 mod n (n odd).
unsigned order_of_two(std::size_t n);
// 2-cyclotomic cosets mod n, each sorted, ordered by smallest member.
std::vector<std::vector<std::size_t>> cyclotomic_cosets(std::size_t n);

// Irreducible factors of x^n + 1 over F2, one per cyclotomic coset, in coset order.
std::vector<PolyF2> factor_binary(std::size_t n, std::size_t limit = default_factor_limit);

// The monic basic irreducible factor of X^n - 1 over Z4 reducing to f2.
PolyZ4 hensel_lift(const PolyF2& f2, std::size_t n);

// Hensel lifts of factor_binary(n), same order.
std::vector<PolyZ4> z4_factors(std::size_t n, std::size_t limit = default_factor_limit);

// Idempotent e of Z4[X]/(X^n - 1) with e = 1 mod a and e = 0 mod b, where
// a*b = X^n - 1 up to a unit. The code (e) equals (b).
PolyZ4 bezout_idempotent(const PolyZ4& a, const PolyZ4& b, std::size_t n);

// "3 + 2X + X^3"; R coefficients with more than one term are parenthesized.
std::string to_string(const PolyZ4& f);
std::string to_string(const PolyR& f);
// Either term order is accepted. n = 0 yields a free polynomial.
PolyZ4 parse_poly_z4(std::string_view s, std::size_t n = 0);
PolyR parse_poly_r(std::string_view s, std::size_t n = 0);

} // namespace z4v
