#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bezout/errors.hpp"
#include "bezout/matrix.hpp"
#include "bezout/scalar.hpp"

namespace bezout {

template <class K>
struct Rref {
    Matrix<K> matrix;
    std::vector<std::size_t> pivots; // pivot column indices, ascending
};

namespace detail {

// Effective zero threshold for an elimination on m: exact mode gets 0 (the
// value is unused), floating mode gets tol scaled by the largest |entry|.
template <class K>
double elimination_threshold(const Matrix<K>& m, double tol) {
    if constexpr (ScalarTraits<K>::is_exact) {
        (void)m;
        (void)tol;
        return 0.0;
    } else {
        double scale = 0.0;
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                scale = std::max(scale, ScalarTraits<K>::magnitude(m(i, j)));
        return tol * scale;
    }
}

} // namespace detail

// Reduced row echelon form via Gauss-Jordan elimination. Exact over Rational;
// in floating mode pivots are chosen by largest absolute value and entries
// with |x| <= tol * max|entry of m| are treated as zero.
template <class K>
Rref<K> rref(const Matrix<K>& m, double tol = kDefaultTol) {
    const double threshold = detail::elimination_threshold(m, tol);
    Matrix<K> a = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        // pick the pivot row: first nonzero below `row` in exact mode,
        // largest magnitude in floating mode
        std::size_t pivot_row = a.rows();
        if constexpr (ScalarTraits<K>::is_exact) {
            for (std::size_t i = row; i < a.rows(); ++i)
                if (!ScalarTraits<K>::is_zero(a(i, col), threshold)) {
                    pivot_row = i;
                    break;
                }
        } else {
            double best = threshold;
            for (std::size_t i = row; i < a.rows(); ++i) {
                double mag = ScalarTraits<K>::magnitude(a(i, col));
                if (mag > best) {
                    best = mag;
                    pivot_row = i;
                }
            }
        }
        if (pivot_row == a.rows()) continue;

        if (pivot_row != row)
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a(row, j), a(pivot_row, j));

        const K pivot = a(row, col);
        for (std::size_t j = col; j < a.cols(); ++j) a(row, j) /= pivot;
        a(row, col) = K(1);

        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row) continue;
            const K factor = a(i, col);
            if (factor == K(0)) continue;
            for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= factor * a(row, j);
            a(i, col) = K(0);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(a), std::move(pivots)};
}

template <class K>
std::size_t rank(const Matrix<K>& m, double tol = kDefaultTol) {
    return rref(m, tol).pivots.size();
}

// Basis of {v : m v = 0} as the columns of an n x (n - rank) matrix. Each
// free column of the RREF contributes one vector with -1 in the free
// coordinate and the corresponding pivot-row entries above, so a null-space
// basis of a stacked Bezout matrix carries a -I block on its free rows.
template <class K>
Matrix<K> null_space_basis(const Matrix<K>& m, double tol = kDefaultTol) {
    const Rref<K> r = rref(m, tol);
    const std::size_t n = m.cols();
    std::vector<std::size_t> free_cols;
    {
        std::size_t next_pivot = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (next_pivot < r.pivots.size() && r.pivots[next_pivot] == c)
                ++next_pivot;
            else
                free_cols.push_back(c);
        }
    }
    Matrix<K> basis(n, free_cols.size());
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        const std::size_t fc = free_cols[f];
        basis(fc, f) = K(-1);
        for (std::size_t p = 0; p < r.pivots.size(); ++p)
            basis(r.pivots[p], f) = r.matrix(p, fc);
    }
    return basis;
}

// Solves row * z = 0 for a row vector (d_k, ..., d_1, 1) whose last entry is
// pinned to 1; z must have k+1 rows. Throws NoSolution when no null vector of
// z^T has a nonzero last coordinate, NonUniqueSolution when the d_i are
// underdetermined.
template <class K>
std::vector<K> solve_left(const Matrix<K>& z, double tol = kDefaultTol) {
    const std::size_t rows = z.rows();
    if (rows == 0) fail("BadDimensions", "solve_left needs at least one row");
    const Matrix<K> w = null_space_basis(z.transpose(), tol);
    const double threshold = detail::elimination_threshold(w, tol);
    std::size_t usable = w.cols();
    for (std::size_t c = 0; c < w.cols(); ++c)
        if (!ScalarTraits<K>::is_zero(w(rows - 1, c), threshold)) {
            usable = c;
            break;
        }
    if (usable == w.cols())
        fail("NoSolution", "no solution with last entry 1");
    if (w.cols() > 1)
        fail("NonUniqueSolution", "solution space has positive dimension");
    std::vector<K> row(rows);
    const K scale = K(1) / w(rows - 1, usable);
    for (std::size_t i = 0; i < rows; ++i) row[i] = w(i, usable) * scale;
    row[rows - 1] = K(1);
    return row;
}

// Exact inverse via elimination on [m | I]; throws SingularMatrix.
template <class K>
Matrix<K> inverse(const Matrix<K>& m, double tol = kDefaultTol) {
    if (m.rows() != m.cols()) fail("BadDimensions", "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    const Rref<K> r = rref(Matrix<K>::hstack(m, Matrix<K>::identity(n)), tol);
    if (r.pivots.size() != n || (n > 0 && r.pivots.back() != n - 1))
        fail("SingularMatrix", "matrix is not invertible");
    return r.matrix.block(0, n, n, n);
}

// Solves a X = rhs for full-column-rank a with a consistent right-hand side.
// Throws RankDeficient / NoSolution otherwise.
template <class K>
Matrix<K> solve_full_column_rank(const Matrix<K>& a, const Matrix<K>& rhs,
                                 double tol = kDefaultTol) {
    if (a.rows() != rhs.rows()) fail("BadDimensions", "solve: row count mismatch");
    const std::size_t c = a.cols();
    const Rref<K> r = rref(Matrix<K>::hstack(a, rhs), tol);
    for (std::size_t p : r.pivots)
        if (p >= c) fail("NoSolution", "inconsistent linear system");
    if (r.pivots.size() != c) fail("RankDeficient", "coefficient matrix lacks full column rank");
    return r.matrix.block(0, c, c, rhs.cols());
}

} // namespace bezout
