#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace bezout {

// Dense row-major matrix over a single scalar type K (exact Rational or
// double). Values are immutable in practice: every library operation takes
// matrices by const reference and returns fresh ones.
template <class K>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const K& value = K(0))
        : rows_(rows), cols_(cols), data_(rows * cols, value) {}

    Matrix(std::initializer_list<std::initializer_list<K>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_)
                throw std::invalid_argument("ragged initializer for Matrix");
            for (const auto& v : row) data_.push_back(v);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Matrix&) const = default;

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_)
            throw std::invalid_argument("matrix product dimension mismatch");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const K& a = (*this)(i, k);
                if (a == K(0)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    std::vector<K> operator*(const std::vector<K>& v) const {
        if (cols_ != v.size())
            throw std::invalid_argument("matrix-vector dimension mismatch");
        std::vector<K> r(rows_, K(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix sum dimension mismatch");
        Matrix r(*this);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix difference dimension mismatch");
        Matrix r(*this);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
        return r;
    }

    Matrix scaled(const K& s) const {
        Matrix r(*this);
        for (auto& v : r.data_) v *= s;
        return r;
    }

    Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
        if (row0 + nrows > rows_ || col0 + ncols > cols_)
            throw std::invalid_argument("block out of range");
        Matrix b(nrows, ncols);
        for (std::size_t i = 0; i < nrows; ++i)
            for (std::size_t j = 0; j < ncols; ++j) b(i, j) = (*this)(row0 + i, col0 + j);
        return b;
    }

    std::vector<K> column(std::size_t j) const {
        std::vector<K> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!(v == K(0))) return false;
        return true;
    }

    // Stacks matrices vertically; all operands must share a column count.
    static Matrix vstack(const std::vector<Matrix>& parts) {
        std::size_t rows = 0;
        std::size_t cols = parts.empty() ? 0 : parts.front().cols();
        for (const auto& p : parts) {
            if (p.cols() != cols)
                throw std::invalid_argument("vstack column mismatch");
            rows += p.rows();
        }
        Matrix r(rows, cols);
        std::size_t offset = 0;
        for (const auto& p : parts) {
            for (std::size_t i = 0; i < p.rows(); ++i)
                for (std::size_t j = 0; j < cols; ++j) r(offset + i, j) = p(i, j);
            offset += p.rows();
        }
        return r;
    }

    static Matrix hstack(const Matrix& a, const Matrix& b) {
        if (a.rows() != b.rows())
            throw std::invalid_argument("hstack row mismatch");
        Matrix r(a.rows(), a.cols() + b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i) {
            for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
        }
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            os << (i == 0 ? "[" : " ");
            for (std::size_t j = 0; j < m.cols(); ++j)
                os << m(i, j) << (j + 1 < m.cols() ? ", " : "");
            os << (i + 1 < m.rows() ? ";\n" : "]");
        }
        return os;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<K> data_;
};

} // namespace bezout
