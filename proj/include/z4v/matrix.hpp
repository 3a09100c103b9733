#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "z4v/errors.hpp"
#include "z4v/ring.hpp"

namespace z4v {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw LengthMismatch("ragged matrix rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        return from_rows(rows, rows.empty() ? 0 : rows.front().size());
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::vector<T> row_vector(std::size_t i) const { return {row(i).begin(), row(i).end()}; }

    void append_row(std::span<const T> r) {
        if (rows_ == 0 && cols_ == 0) cols_ = r.size();
        if (r.size() != cols_) throw LengthMismatch("row length does not match matrix width");
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

    const std::vector<T>& data() const { return data_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using Z4Vector = std::vector<Z4>;
using RVector = std::vector<RElement>;
using Z4Matrix = Matrix<Z4>;
using RMatrix = Matrix<RElement>;

inline Z4 dot(std::span<const Z4> x, std::span<const Z4> y) {
    if (x.size() != y.size()) throw LengthMismatch("inner product of vectors with different lengths");
    Z4 s;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

inline RElement dot(std::span<const RElement> x, std::span<const RElement> y) {
    if (x.size() != y.size()) throw LengthMismatch("inner product of vectors with different lengths");
    RElement s;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

} // namespace z4v
