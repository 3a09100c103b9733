#include "z4v/ring.hpp"

#include <cctype>

#include "z4v/errors.hpp"

namespace z4v {

std::string_view metric_name(Metric m) {
    switch (m) {
    case Metric::hamming: return "hamming";
    case Metric::lee: return "lee";
    case Metric::gray: return "gray";
    case Metric::euclidean: return "euclidean";
    }
    return "?";
}

Metric parse_metric(std::string_view s) {
    if (s == "hamming") return Metric::hamming;
    if (s == "lee") return Metric::lee;
    if (s == "gray") return Metric::gray;
    if (s == "euclidean") return Metric::euclidean;
    throw ParseError("unknown metric '" + std::string(s) + "'");
}

int weight(RElement r, Metric m) {
    auto [g0, g1] = gray_element(r);
    switch (m) {
    case Metric::hamming: return r.is_zero() ? 0 : 1;
    case Metric::gray: return lee_weight(g0) + lee_weight(g1);
    case Metric::euclidean: return euclidean_weight(g0) + euclidean_weight(g1);
    case Metric::lee: break;
    }
    throw Error("Lee weight is defined on Z4, not on R");
}

std::string to_string(Z4 x) { return std::string(1, static_cast<char>('0' + x.value())); }

std::string to_string(RElement r) {
    const int a = r.a().value();
    const int b = r.b().value();
    if (b == 0) return std::to_string(a);
    std::string vs = (b == 1 ? "" : std::to_string(b)) + "v";
    if (a == 0) return vs;
    return std::to_string(a) + "+" + vs;
}

RElement parse_element(std::string_view s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw ParseError("empty ring element");

    RElement acc;
    std::size_t i = 0;
    bool first = true;
    while (i < t.size()) {
        int sign = 1;
        if (t[i] == '+' || t[i] == '-') {
            sign = t[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw ParseError("bad ring element '" + std::string(s) + "'");
        }
        first = false;
        std::size_t j = i;
        while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
        int coef = 1;
        bool has_digits = j > i;
        if (has_digits) coef = std::stoi(t.substr(i, j - i)) % 4;
        bool is_v = j < t.size() && (t[j] == 'v' || t[j] == 'V');
        if (!has_digits && !is_v) throw ParseError("bad ring element '" + std::string(s) + "'");
        if (is_v) {
            ++j;
            if (j < t.size() && t[j] == '*') throw ParseError("bad ring element '" + std::string(s) + "'");
        }
        Z4 c(sign * coef);
        acc += is_v ? RElement(0, c) : RElement(c, 0);
        i = j;
    }
    return acc;
}

Z4 parse_z4(std::string_view s) {
    RElement r = parse_element(s);
    if (!r.b().is_zero()) throw ParseError("expected a Z4 entry, got '" + std::string(s) + "'");
    return r.a();
}

std::ostream& operator<<(std::ostream& os, Z4 x) { return os << int(x.value()); }
std::ostream& operator<<(std::ostream& os, RElement r) { return os << to_string(r); }

} // namespace z4v
