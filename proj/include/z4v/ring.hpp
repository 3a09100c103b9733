#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace z4v {

enum class Metric { hamming, lee, gray, euclidean };

std::string_view metric_name(Metric m);
Metric parse_metric(std::string_view s);

class Z4 {
public:
    constexpr Z4() = default;
    constexpr Z4(int x) : v_(static_cast<std::uint8_t>(x & 3)) {}

    constexpr std::uint8_t value() const { return v_; }
    constexpr bool is_unit() const { return (v_ & 1) != 0; }
    constexpr bool is_zero() const { return v_ == 0; }

    friend constexpr Z4 operator+(Z4 a, Z4 b) { return Z4(a.v_ + b.v_); }
    friend constexpr Z4 operator-(Z4 a, Z4 b) { return Z4(a.v_ + 4 - b.v_); }
    friend constexpr Z4 operator*(Z4 a, Z4 b) { return Z4(a.v_ * b.v_); }
    constexpr Z4 operator-() const { return Z4(4 - v_); }
    constexpr Z4& operator+=(Z4 o) { return *this = *this + o; }
    constexpr Z4& operator-=(Z4 o) { return *this = *this - o; }
    constexpr Z4& operator*=(Z4 o) { return *this = *this * o; }
    friend constexpr bool operator==(Z4, Z4) = default;
    friend constexpr auto operator<=>(Z4, Z4) = default;

private:
    std::uint8_t v_ = 0;
};

constexpr int lee_weight(Z4 x) { return x.value() == 2 ? 2 : (x.value() ? 1 : 0); }
constexpr int euclidean_weight(Z4 x) { return x.value() == 2 ? 4 : (x.value() ? 1 : 0); }
constexpr int hamming_weight(Z4 x) { return x.value() ? 1 : 0; }

struct CrtPair {
    Z4 x; // v-component, a + b
    Z4 y; // (1 - v)-component, a
    friend constexpr bool operator==(CrtPair, CrtPair) = default;
};

// a + bv with v^2 = v.
class RElement {
public:
    constexpr RElement() = default;
    constexpr RElement(Z4 a, Z4 b = Z4{}) : a_(a), b_(b) {}
    constexpr RElement(int a) : a_(a), b_(0) {}

    static constexpr RElement v() { return RElement(0, 1); }

    constexpr Z4 a() const { return a_; }
    constexpr Z4 b() const { return b_; }

    // Slot index in the order 0,1,2,3,v,1+v,...,3+3v.
    constexpr int index() const { return a_.value() + 4 * b_.value(); }
    static constexpr RElement from_index(int i) { return RElement(i & 3, (i >> 2) & 3); }

    constexpr bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    constexpr bool is_unit() const { return a_.is_unit() && (a_ + b_).is_unit(); }

    friend constexpr RElement operator+(RElement p, RElement q) { return {p.a_ + q.a_, p.b_ + q.b_}; }
    friend constexpr RElement operator-(RElement p, RElement q) { return {p.a_ - q.a_, p.b_ - q.b_}; }
    friend constexpr RElement operator*(RElement p, RElement q) {
        return {p.a_ * q.a_, p.a_ * q.b_ + p.b_ * q.a_ + p.b_ * q.b_};
    }
    constexpr RElement operator-() const { return {-a_, -b_}; }
    constexpr RElement& operator+=(RElement o) { return *this = *this + o; }
    constexpr RElement& operator-=(RElement o) { return *this = *this - o; }
    constexpr RElement& operator*=(RElement o) { return *this = *this * o; }
    friend constexpr bool operator==(RElement, RElement) = default;
    friend constexpr auto operator<=>(RElement, RElement) = default;

private:
    Z4 a_{};
    Z4 b_{};
};

constexpr CrtPair crt_split(RElement r) { return {r.a() + r.b(), r.a()}; }
constexpr RElement crt_join(CrtPair p) { return {p.y, p.x - p.y}; }
constexpr RElement crt_join(Z4 x, Z4 y) { return crt_join(CrtPair{x, y}); }

// a + b(1 - v)
constexpr RElement conjugate(RElement r) { return {r.a() + r.b(), -r.b()}; }

constexpr std::pair<Z4, Z4> gray_element(RElement r) { return {r.a(), r.a() + r.b()}; }

// Hamming weight is over R (one symbol per coordinate). Lee is rejected.
int weight(RElement r, Metric m);

// Canonical strings: "0", "2", "v", "3v", "1+2v".
std::string to_string(Z4 x);
std::string to_string(RElement r);
RElement parse_element(std::string_view s);
Z4 parse_z4(std::string_view s);

std::ostream& operator<<(std::ostream& os, Z4 x);
std::ostream& operator<<(std::ostream& os, RElement r);

inline constexpr std::array<RElement, 4> r_units{RElement(1), RElement(3), RElement(1, 2), RElement(3, 2)};

} // namespace z4v
