#pragma once

#include "twdual/arith.hpp"
#include "twdual/error.hpp"

#include <cstddef>
#include <vector>

namespace twdual {

/// Dense row-major matrix over an exact ring.
template <class T> class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>> &rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            ensure(rows[i].size() == cols, "ragged matrix rows");
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    std::vector<T> col(std::size_t j) const {
        std::vector<T> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            out[i] = (*this)(i, j);
        return out;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, a), (*this)(i, b));
    }
    // row[dst] += factor * row[src]
    void add_row(std::size_t dst, std::size_t src, const T &factor) {
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(dst, j) += factor * (*this)(src, j);
    }
    void add_col(std::size_t dst, std::size_t src, const T &factor) {
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, dst) += factor * (*this)(i, src);
    }
    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(i, j) = -(*this)(i, j);
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix &a, const Matrix &b) {
        ensure(a.cols_ == b.rows_, "matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    friend bool operator==(const Matrix &a, const Matrix &b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix &m);
/// Throws InternalError when some entry is not integral.
IntMatrix to_integer(const RatMatrix &m);
bool is_integral(const RatMatrix &m);

RatMatrix rows_to_matrix(const std::vector<RatVector> &rows, std::size_t cols);

/// Row vector times matrix: v^T M.
RatVector row_times(const RatVector &v, const RatMatrix &m);
/// Matrix times column vector: M v.
RatVector times_col(const RatMatrix &m, const RatVector &v);
/// u^T M v.
Rational bilinear(const RatVector &u, const RatMatrix &m, const RatVector &v);

Rational determinant(RatMatrix m);
Integer determinant(const IntMatrix &m);
/// Throws DomainError when singular.
RatMatrix inverse(const RatMatrix &m);

} // namespace twdual
