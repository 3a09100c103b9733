#pragma once

// Brute-force reference computations for small codes. Nothing here goes
// through canonical forms or the CRT.

#include <set>
#include <vector>

#include "z4v/matrix.hpp"

namespace oracle {

using z4v::RElement;
using z4v::RMatrix;
using z4v::RVector;
using z4v::Z4;
using z4v::Z4Matrix;
using z4v::Z4Vector;

inline RElement mul(RElement p, RElement q) {
    int a = p.a().value(), b = p.b().value(), c = q.a().value(), d = q.b().value();
    return RElement(a * c, a * d + b * c + b * d);
}

inline RElement dot(const RVector& x, const RVector& y) {
    RElement s;
    for (std::size_t i = 0; i < x.size(); ++i) s += mul(x[i], y[i]);
    return s;
}

inline Z4 dot(const Z4Vector& x, const Z4Vector& y) {
    int s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i].value() * y[i].value();
    return Z4(s);
}

template <class T, class Scalars>
std::set<std::vector<T>> closure(const z4v::Matrix<T>& g, const Scalars& scalars) {
    std::set<std::vector<T>> words{std::vector<T>(g.cols())};
    for (std::size_t i = 0; i < g.rows(); ++i) {
        std::set<std::vector<T>> next;
        for (const auto& w : words)
            for (T s : scalars) {
                auto x = w;
                for (std::size_t j = 0; j < g.cols(); ++j) x[j] += s * g(i, j);
                next.insert(x);
            }
        words = std::move(next);
    }
    return words;
}

inline std::set<RVector> span(const RMatrix& g) {
    std::vector<RElement> all;
    for (int i = 0; i < 16; ++i) all.push_back(RElement::from_index(i));
    return closure(g, all);
}

inline std::set<Z4Vector> span(const Z4Matrix& g) { return closure(g, std::vector<Z4>{0, 1, 2, 3}); }

inline std::vector<RVector> space(std::size_t n) {
    std::vector<RVector> out;
    std::size_t total = 1;
    for (std::size_t j = 0; j < n; ++j) total *= 16;
    for (std::size_t x = 0; x < total; ++x) {
        RVector w(n);
        std::size_t y = x;
        for (std::size_t j = 0; j < n; ++j, y /= 16) w[j] = RElement::from_index(static_cast<int>(y % 16));
        out.push_back(w);
    }
    return out;
}

inline std::set<RVector> dual(const std::set<RVector>& c, std::size_t n) {
    std::set<RVector> out;
    for (const auto& w : space(n)) {
        bool orth = true;
        for (const auto& u : c)
            if (!dot(w, u).is_zero()) {
                orth = false;
                break;
            }
        if (orth) out.insert(w);
    }
    return out;
}

// Gray weight of one R symbol a + bv, from the pair (a, a + b).
inline int lee(Z4 x) { return std::min<int>(x.value(), 4 - x.value()); }
inline int gray(RElement r) { return lee(r.a()) + lee(r.a() + r.b()); }
inline int euclid(Z4 x) { return lee(x) * lee(x); }

} // namespace oracle
