#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bezout/poly.hpp"

namespace bezout {

// Symmetric n x n coefficient matrix of the Cayley quotient
// (P(t)Q(x) - P(x)Q(t)) / (t - x) with respect to basis(t) (x) basis(x),
// where n = max(deg P, deg Q) and basis spans polynomials of degree n-1.
template <class K>
struct BezoutMatrix {
    Basis<K> basis;
    std::size_t n = 0;
    Matrix<K> matrix;
};

// Vertical stack of Bezout matrices Bez(P, Q_i) sharing one P, one basis and
// one sizing degree n = deg P.
template <class K>
struct StackedBezout {
    Basis<K> basis;
    std::size_t n = 0;
    std::vector<BezoutMatrix<K>> blocks;
    Matrix<K> matrix; // (r*n) x n
};

namespace detail {

// Coefficient matrix of the Cayley quotient in the monomial basis, from
// ascending monomial coefficient vectors padded to length n+1: synthetic
// division of P(t)Q(x) - P(x)Q(t) by (t - x) along the t variable. Row i,
// column j of the result is the coefficient of t^i x^j.
template <class K>
Matrix<K> cayley_from_monomial(const std::vector<K>& p, const std::vector<K>& q, std::size_t n) {
    Matrix<K> bez(n, n);
    std::vector<K> cur(n + 1, K(0)); // quotient coefficient of t^i, as a poly in x
    for (std::size_t i = n; i >= 1; --i) {
        for (std::size_t j = n; j >= 1; --j) cur[j] = cur[j - 1]; // multiply by x
        cur[0] = K(0);
        for (std::size_t j = 0; j <= n; ++j) cur[j] += p[i] * q[j] - q[i] * p[j];
        for (std::size_t j = 0; j < n; ++j) bez(i - 1, j) = cur[j];
    }
    return bez;
}

template <class K>
std::vector<K> padded_monomial_coeffs(const Poly<K>& p, std::size_t n, double tol) {
    std::vector<K> c = monomial_coeffs(p, tol);
    c.resize(n + 1, K(0)); // effective degree <= n, so dropped entries are zero
    return c;
}

template <class K>
Matrix<K> symmetrized(const Matrix<K>& m) {
    if constexpr (ScalarTraits<K>::is_exact) {
        return m;
    } else {
        // congruence transforms in floating arithmetic lose bitwise symmetry
        Matrix<K> r = m;
        for (std::size_t i = 0; i < r.rows(); ++i)
            for (std::size_t j = i + 1; j < r.cols(); ++j) {
                const K avg = (r(i, j) + r(j, i)) / K(2);
                r(i, j) = avg;
                r(j, i) = avg;
            }
        return r;
    }
}

template <class K>
std::size_t pair_size_degree(const Poly<K>& p, const Poly<K>& q, double tol) {
    const int dp = effective_degree(p, tol);
    const int dq = effective_degree(q, tol);
    if (dp < 0 && dq < 0) fail("BothZero", "Bezout matrix of two zero polynomials");
    const int n = std::max(dp, dq);
    if (n < 1) fail("BadDegree", "Bezout matrix needs max degree >= 1");
    return static_cast<std::size_t>(n);
}

} // namespace detail

// Cayley quotient coefficients in the monomial basis; this matrix is the
// Bezout matrix of (p, q) in the monomial basis of degree n-1. Proportional
// inputs give the zero matrix; only a pair of zero polynomials is an error.
template <class K>
Matrix<K> cayley_quotient_monomial(const Poly<K>& p, const Poly<K>& q, double tol = kDefaultTol) {
    if (p.basis.kind() != BasisKind::Monomial || q.basis.kind() != BasisKind::Monomial)
        fail("BadPoly", "cayley_quotient_monomial expects monomial-basis inputs");
    const std::size_t n = detail::pair_size_degree(p, q, tol);
    return detail::cayley_from_monomial(detail::padded_monomial_coeffs(p, n, tol),
                                        detail::padded_monomial_coeffs(q, n, tol), n);
}

// Bezout matrix of (p, q) in basis phi, built from the monomial Cayley
// quotient by the congruence Bez_phi = P(St->phi) Bez_St P(St->phi)^T.
// p and q may be given in any bases; phi must span degree n-1.
template <class K>
BezoutMatrix<K> bezout_matrix(const Poly<K>& p, const Poly<K>& q, const Basis<K>& phi,
                              double tol = kDefaultTol) {
    const std::size_t n = detail::pair_size_degree(p, q, tol);
    if (phi.degree() != n - 1)
        fail("BasisDegreeMismatch", "Bezout basis must have degree " + std::to_string(n - 1) +
                                        ", got " + std::to_string(phi.degree()));
    const Matrix<K> bez_st = detail::cayley_from_monomial(
        detail::padded_monomial_coeffs(p, n, tol), detail::padded_monomial_coeffs(q, n, tol), n);
    if (phi.kind() == BasisKind::Monomial) return {phi, n, bez_st};
    const Matrix<K> s = from_monomial_matrix(phi, tol);
    return {phi, n, detail::symmetrized(s * bez_st * s.transpose())};
}

// Direct evaluation form in the Lagrange basis on `nodes`: entry (i, j) is
// the Cayley quotient at (x_i, x_j), with the limit value
// P'(x)Q(x) - P(x)Q'(x) on the diagonal. Agrees exactly with
// bezout_matrix(p, q, lagrange(nodes)).
template <class K>
BezoutMatrix<K> bezout_matrix_lagrange_direct(const Poly<K>& p, const Poly<K>& q,
                                              std::vector<K> nodes, double tol = kDefaultTol) {
    const std::size_t n = detail::pair_size_degree(p, q, tol);
    if (nodes.size() != n)
        fail("BasisDegreeMismatch",
             "need exactly " + std::to_string(n) + " nodes, got " + std::to_string(nodes.size()));
    Basis<K> basis = Basis<K>::lagrange(std::move(nodes)); // validates distinctness
    const std::vector<K> pc = monomial_coeffs(p, tol);
    const std::vector<K> qc = monomial_coeffs(q, tol);
    const std::vector<K> dpc = detail::poly_derivative(pc);
    const std::vector<K> dqc = detail::poly_derivative(qc);

    const std::vector<K>& xs = basis.nodes();
    std::vector<K> pv(n), qv(n);
    for (std::size_t i = 0; i < n; ++i) {
        pv[i] = detail::poly_eval(pc, xs[i]);
        qv[i] = detail::poly_eval(qc, xs[i]);
    }
    Matrix<K> m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = detail::poly_eval(dpc, xs[i]) * qv[i] - pv[i] * detail::poly_eval(dqc, xs[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            const K value = (pv[i] * qv[j] - pv[j] * qv[i]) / (xs[i] - xs[j]);
            m(i, j) = value;
            m(j, i) = value;
        }
    }
    return {std::move(basis), n, std::move(m)};
}

// Stacked Bezout matrix of P against Q_1..Q_r in basis phi. P fixes the
// sizing degree n; every Q_i must satisfy deg Q_i <= n (no silent swap).
template <class K>
StackedBezout<K> stacked(const Poly<K>& p, const std::vector<Poly<K>>& qs, const Basis<K>& phi,
                         double tol = kDefaultTol) {
    if (qs.empty()) fail("BadArity", "stacked Bezout matrix needs at least one Q");
    const int dp = effective_degree(p, tol);
    if (dp < 1) fail("BadDegree", "P must have degree >= 1");
    const std::size_t n = static_cast<std::size_t>(dp);
    if (phi.degree() != n - 1)
        fail("BasisDegreeMismatch", "Bezout basis must have degree " + std::to_string(n - 1));
    std::vector<BezoutMatrix<K>> blocks;
    std::vector<Matrix<K>> parts;
    blocks.reserve(qs.size());
    parts.reserve(qs.size());
    for (const Poly<K>& q : qs) {
        if (effective_degree(q, tol) > dp)
            fail("DegreeViolation", "deg Q_i exceeds deg P; pass the largest-degree input as P");
        blocks.push_back(bezout_matrix(p, q, phi, tol));
        parts.push_back(blocks.back().matrix);
    }
    return {phi, n, std::move(blocks), Matrix<K>::vstack(parts)};
}

} // namespace bezout
