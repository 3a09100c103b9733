#include "z4v/z4_linalg.hpp"

#include <algorithm>
#include <numeric>

#include "z4v/parallel.hpp"

namespace z4v {

namespace {

void axpy(std::span<Z4> dst, Z4 q, std::span<const Z4> src) {
    if (q.is_zero()) return;
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] -= q * src[i];
}

bool is_zero_row(std::span<const Z4> r) {
    return std::all_of(r.begin(), r.end(), [](Z4 x) { return x.is_zero(); });
}

std::size_t leading(std::span<const Z4> r) {
    for (std::size_t j = 0; j < r.size(); ++j)
        if (!r[j].is_zero()) return j;
    return r.size();
}

} // namespace

Z4Matrix howell_form(const Z4Matrix& m) {
    const std::size_t n = m.cols();
    std::vector<Z4Vector> pool;
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (!is_zero_row(m.row(i))) pool.push_back(m.row_vector(i));

    std::size_t r = 0;
    for (std::size_t j = 0; j < n && r < pool.size(); ++j) {
        std::size_t best = pool.size();
        for (std::size_t i = r; i < pool.size(); ++i) {
            if (pool[i][j].is_unit()) { best = i; break; }
            if (best == pool.size() && pool[i][j] == Z4(2)) best = i;
        }
        if (best == pool.size()) continue;
        std::swap(pool[r], pool[best]);
        Z4Vector& piv = pool[r];
        if (piv[j] == Z4(3))
            for (Z4& x : piv) x *= Z4(3);
        const bool unit = piv[j] == Z4(1);

        for (std::size_t i = r + 1; i < pool.size(); ++i) {
            Z4 e = pool[i][j];
            if (e.is_zero()) continue;
            axpy(pool[i], unit ? e : Z4(e.value() / 2), piv);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Z4 e = pool[i][j];
            axpy(pool[i], unit ? e : Z4(e.value() / 2), pool[r]);
        }
        if (!unit) {
            Z4Vector twice(piv);
            for (Z4& x : twice) x *= Z4(2);
            if (!is_zero_row(twice)) pool.push_back(std::move(twice));
        }
        ++r;
    }

    Z4Matrix out(0, n);
    for (std::size_t i = 0; i < r; ++i) out.append_row(pool[i]);
    return out;
}

StandardForm standard_form(const Z4Matrix& m) {
    const std::size_t n = m.cols();
    Z4Matrix w = m;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    auto swap_rows = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < n; ++j) std::swap(w(a, j), w(b, j));
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < w.rows(); ++i) std::swap(w(i, a), w(i, b));
        std::swap(perm[a], perm[b]);
    };
    auto find = [&](std::size_t r, auto pred, std::size_t& pi, std::size_t& pj) {
        for (std::size_t i = r; i < w.rows(); ++i)
            for (std::size_t j = r; j < n; ++j)
                if (pred(w(i, j))) { pi = i; pj = j; return true; }
        return false;
    };

    std::size_t r = 0, pi = 0, pj = 0;
    while (r < w.rows() && find(r, [](Z4 x) { return x.is_unit(); }, pi, pj)) {
        swap_rows(pi, r);
        swap_cols(pj, r);
        if (w(r, r) == Z4(3))
            for (std::size_t j = 0; j < n; ++j) w(r, j) *= Z4(3);
        for (std::size_t i = 0; i < w.rows(); ++i)
            if (i != r) axpy(w.row(i), w(i, r), w.row(r));
        ++r;
    }
    const std::size_t k1 = r;
    while (r < w.rows() && find(r, [](Z4 x) { return x == Z4(2); }, pi, pj)) {
        swap_rows(pi, r);
        swap_cols(pj, r);
        for (std::size_t i = 0; i < w.rows(); ++i) {
            if (i == r) continue;
            if (w(i, r).value() >= 2) axpy(w.row(i), Z4(1), w.row(r));
        }
        ++r;
    }

    StandardForm sf;
    sf.k1 = k1;
    sf.k2 = r - k1;
    sf.perm = std::move(perm);
    sf.matrix = Z4Matrix(0, n);
    for (std::size_t i = 0; i < r; ++i) sf.matrix.append_row(w.row(i));
    return sf;
}

Z4Code::Z4Code(Z4Matrix generators)
    : n_(generators.cols()), gens_(std::move(generators)), canon_(howell_form(gens_)),
      std_(standard_form(gens_)), basis_(0, n_) {
    for (std::size_t i = 0; i < std_.matrix.rows(); ++i) {
        Z4Vector row(n_);
        for (std::size_t c = 0; c < n_; ++c) row[std_.perm[c]] = std_.matrix(i, c);
        basis_.append_row(row);
    }
}

Z4Code::Z4Code(std::size_t n, const std::vector<Z4Vector>& rows) : Z4Code([&] {
        Z4Matrix m(0, n);
        for (const auto& r : rows) m.append_row(r);
        return m;
    }()) {}

Z4Code Z4Code::zero(std::size_t n) { return Z4Code(Z4Matrix(0, n)); }

Z4Code Z4Code::full(std::size_t n) {
    Z4Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Z4(1);
    return Z4Code(std::move(m));
}

bool Z4Code::contains(std::span<const Z4> w) const {
    if (w.size() != n_) throw LengthMismatch("vector length differs from code length");
    Z4Vector x(w.begin(), w.end());
    for (std::size_t i = 0; i < canon_.rows(); ++i) {
        auto row = canon_.row(i);
        std::size_t j = leading(row);
        for (std::size_t t = 0; t < j; ++t)
            if (!x[t].is_zero()) return false;
        Z4 q;
        if (row[j] == Z4(1)) {
            q = x[j];
        } else {
            if (x[j].is_unit()) return false;
            q = Z4(x[j].value() / 2);
        }
        axpy(x, q, row);
    }
    return is_zero_row(x);
}

Z4Code Z4Code::dual() const {
    const std::size_t k = std_.k1, l = std_.k2, m = n_ - k - l;
    const Z4Matrix& s = std_.matrix;
    auto A = [&](std::size_t i, std::size_t t) { return s(i, k + t); };
    auto B = [&](std::size_t i, std::size_t t) { return s(i, k + l + t); };
    auto C = [&](std::size_t t, std::size_t u) { return Z4(s(k + t, k + l + u).value() / 2); };

    Z4Matrix d(m + l, n_);
    auto put = [&](std::size_t row, std::size_t c, Z4 v) { d(row, std_.perm[c]) = v; };
    for (std::size_t t = 0; t < m; ++t) {
        for (std::size_t i = 0; i < k; ++i) {
            Z4 v = -B(i, t);
            for (std::size_t u = 0; u < l; ++u) v -= C(u, t) * A(i, u);
            put(t, i, v);
        }
        for (std::size_t u = 0; u < l; ++u) put(t, k + u, C(u, t));
        put(t, k + l + t, Z4(1));
    }
    for (std::size_t u = 0; u < l; ++u) {
        for (std::size_t i = 0; i < k; ++i) put(m + u, i, Z4(2) * A(i, u));
        put(m + u, k + u, Z4(2));
    }
    return Z4Code(std::move(d));
}

bool Z4Code::is_self_orthogonal() const {
    for (std::size_t i = 0; i < canon_.rows(); ++i)
        for (std::size_t j = i; j < canon_.rows(); ++j)
            if (!dot(canon_.row(i), canon_.row(j)).is_zero()) return false;
    return true;
}

std::vector<Z4Vector> enumerate_codewords(const Z4Code& c, std::uint64_t cap) {
    PackedBasis b(c);
    using Acc = std::vector<Z4Vector>;
    const std::size_t n = c.length();
    return fold_codewords(
        b, cap, Acc{}, [n](Acc& acc, const PackedWord& w) { acc.push_back(unpack(w, n)); },
        [](Acc& a, Acc& b2) { a.insert(a.end(), b2.begin(), b2.end()); }, false);
}

Z4Matrix stack(const Z4Matrix& top, const Z4Matrix& bottom) {
    if (top.cols() != bottom.cols()) throw LengthMismatch("stacked matrices differ in width");
    Z4Matrix out(0, top.cols());
    for (std::size_t i = 0; i < top.rows(); ++i) out.append_row(top.row(i));
    for (std::size_t i = 0; i < bottom.rows(); ++i) out.append_row(bottom.row(i));
    return out;
}

Z4Matrix transpose(const Z4Matrix& m) {
    Z4Matrix t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    return t;
}

} // namespace z4v
