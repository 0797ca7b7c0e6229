#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bezout/errors.hpp"
#include "bezout/linalg.hpp"
#include "bezout/matrix.hpp"

namespace bezout {

enum class BasisKind { Monomial, Bernstein, Lagrange, Hermite };

inline const char* kind_name(BasisKind k) {
    switch (k) {
        case BasisKind::Monomial: return "monomial";
        case BasisKind::Bernstein: return "bernstein";
        case BasisKind::Lagrange: return "lagrange";
        case BasisKind::Hermite: return "hermite";
    }
    return "?";
}

// A basis of the space of polynomials of degree <= degree(), with degree()+1
// elements indexed 0..degree(). Lagrange carries its interpolation nodes;
// Hermite carries nodes plus confluencies (how many consecutive derivatives
// are prescribed at each node). Equality is structural.
template <class K>
class Basis {
public:
    static Basis monomial(std::size_t degree) { return Basis(BasisKind::Monomial, degree, {}, {}); }
    static Basis bernstein(std::size_t degree) { return Basis(BasisKind::Bernstein, degree, {}, {}); }

    static Basis lagrange(std::vector<K> nodes) {
        if (nodes.empty()) fail("BadBasis", "lagrange basis needs at least one node");
        require_distinct(nodes);
        const std::size_t degree = nodes.size() - 1;
        return Basis(BasisKind::Lagrange, degree, std::move(nodes), {});
    }

    static Basis hermite(std::vector<K> nodes, std::vector<int> confluencies) {
        if (nodes.empty()) fail("BadBasis", "hermite basis needs at least one node");
        if (nodes.size() != confluencies.size())
            fail("BadBasis", "hermite basis needs one confluency per node");
        std::size_t conditions = 0;
        for (int c : confluencies) {
            if (c < 1) fail("BadBasis", "hermite confluencies must be positive");
            conditions += static_cast<std::size_t>(c);
        }
        require_distinct(nodes);
        return Basis(BasisKind::Hermite, conditions - 1, std::move(nodes), std::move(confluencies));
    }

    BasisKind kind() const noexcept { return kind_; }
    std::size_t degree() const noexcept { return degree_; }
    std::size_t dimension() const noexcept { return degree_ + 1; }
    const std::vector<K>& nodes() const noexcept { return nodes_; }
    const std::vector<int>& confluencies() const noexcept { return confluencies_; }

    bool operator==(const Basis&) const = default;

private:
    Basis(BasisKind kind, std::size_t degree, std::vector<K> nodes, std::vector<int> confluencies)
        : kind_(kind), degree_(degree), nodes_(std::move(nodes)),
          confluencies_(std::move(confluencies)) {}

    static void require_distinct(const std::vector<K>& nodes) {
        for (std::size_t i = 0; i < nodes.size(); ++i)
            for (std::size_t j = i + 1; j < nodes.size(); ++j)
                if (nodes[i] == nodes[j]) fail("RepeatedNodes", "basis nodes must be distinct");
    }

    BasisKind kind_;
    std::size_t degree_;
    std::vector<K> nodes_;
    std::vector<int> confluencies_;
};

namespace detail {

// binomial(n, k) evaluated in K via the multiplicative recurrence; exact over
// Rational, and zero when k > n.
template <class K>
K binomial(std::size_t n, std::size_t k) {
    K r(1);
    for (std::size_t i = 0; i < k; ++i) {
        r *= K(static_cast<long long>(n) - static_cast<long long>(i));
        r /= K(static_cast<long long>(i) + 1);
    }
    return r;
}

// m (m-1) ... (m-c+1); equals 0 when c > m and 1 when c = 0.
template <class K>
K falling_factorial(std::size_t m, std::size_t c) {
    K r(1);
    for (std::size_t i = 0; i < c; ++i)
        r *= K(static_cast<long long>(m) - static_cast<long long>(i));
    return r;
}

template <class K>
K kpow(const K& x, std::size_t e) {
    K r(1);
    for (std::size_t i = 0; i < e; ++i) r *= x;
    return r;
}

// Ascending-coefficient polynomial helpers shared by the basis and Bezout
// construction code.
template <class K>
std::vector<K> poly_mul(const std::vector<K>& a, const std::vector<K>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<K> r(a.size() + b.size() - 1, K(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

template <class K>
K poly_eval(const std::vector<K>& coeffs, const K& t) {
    K r(0);
    for (std::size_t i = coeffs.size(); i-- > 0;) r = r * t + coeffs[i];
    return r;
}

template <class K>
std::vector<K> poly_derivative(const std::vector<K>& coeffs) {
    if (coeffs.size() <= 1) return {K(0)};
    std::vector<K> r(coeffs.size() - 1);
    for (std::size_t i = 1; i < coeffs.size(); ++i)
        r[i - 1] = coeffs[i] * K(static_cast<long long>(i));
    return r;
}

} // namespace detail

// Change matrix from basis coordinates to monomial coordinates: column j
// holds the monomial coefficients of basis function j, so c_St = M * c_B.
template <class K>
Matrix<K> to_monomial_matrix(const Basis<K>& b, double tol = kDefaultTol);

// Change matrix from monomial coordinates to basis coordinates, c_B = M * c_St.
// For Lagrange this is the Vandermonde matrix of the nodes; for Hermite the
// confluent Vandermonde matrix (row per interpolation condition, node-major,
// derivative-minor).
template <class K>
Matrix<K> from_monomial_matrix(const Basis<K>& b, double /*tol*/ = kDefaultTol) {
    const std::size_t n = b.dimension();
    Matrix<K> m(n, n);
    switch (b.kind()) {
        case BasisKind::Monomial:
            return Matrix<K>::identity(n);
        case BasisKind::Bernstein: {
            const std::size_t d = b.degree();
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t i = 0; i <= j; ++i)
                    m(j, i) = detail::binomial<K>(j, i) / detail::binomial<K>(d, i);
            return m;
        }
        case BasisKind::Lagrange: {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    m(i, j) = detail::kpow(b.nodes()[i], j);
            return m;
        }
        case BasisKind::Hermite: {
            std::size_t row = 0;
            for (std::size_t node = 0; node < b.nodes().size(); ++node) {
                const K& tau = b.nodes()[node];
                for (int delta = 0; delta < b.confluencies()[node]; ++delta, ++row)
                    for (std::size_t j = static_cast<std::size_t>(delta); j < n; ++j)
                        m(row, j) = detail::falling_factorial<K>(j, delta) *
                                    detail::kpow(tau, j - delta);
            }
            return m;
        }
    }
    fail("BadBasis", "unknown basis kind");
}

template <class K>
Matrix<K> to_monomial_matrix(const Basis<K>& b, double tol) {
    const std::size_t n = b.dimension();
    Matrix<K> m(n, n);
    switch (b.kind()) {
        case BasisKind::Monomial:
            return Matrix<K>::identity(n);
        case BasisKind::Bernstein: {
            const std::size_t d = b.degree();
            for (std::size_t j = 0; j < n; ++j) {
                const K lead = detail::binomial<K>(d, j);
                for (std::size_t i = j; i < n; ++i) {
                    K entry = lead * detail::binomial<K>(d - j, i - j);
                    if ((i - j) % 2 == 1) entry = -entry;
                    m(i, j) = entry;
                }
            }
            return m;
        }
        case BasisKind::Lagrange: {
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<K> numer{K(1)};
                K denom(1);
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == j) continue;
                    numer = detail::poly_mul(numer, {-b.nodes()[k], K(1)});
                    denom *= b.nodes()[j] - b.nodes()[k];
                }
                for (std::size_t i = 0; i < n; ++i) m(i, j) = numer[i] / denom;
            }
            return m;
        }
        case BasisKind::Hermite:
            // The cardinal functions of confluent interpolation have no handy
            // closed form; invert the confluent Vandermonde matrix exactly.
            try {
                return inverse(from_monomial_matrix(b, tol), tol);
            } catch (const Error&) {
                fail("SingularBasis", "confluent Vandermonde matrix is singular");
            }
    }
    fail("BadBasis", "unknown basis kind");
}

template <class K>
struct BasisChange {
    Basis<K> from;
    Basis<K> to;
    Matrix<K> matrix; // c_to = matrix * c_from
};

// Change matrix between two bases of the same degree, composed through the
// monomial basis: c_to = P(St->to) P(from->St) c_from.
template <class K>
BasisChange<K> change_matrix(const Basis<K>& from, const Basis<K>& to, double tol = kDefaultTol) {
    if (from.degree() != to.degree())
        fail("DegreeMismatch", "change of basis between different degrees");
    return {from, to, from_monomial_matrix(to, tol) * to_monomial_matrix(from, tol)};
}

// order-th derivative of basis function j evaluated at t.
template <class K>
K basis_function_derivative(const Basis<K>& b, std::size_t j, std::size_t order, const K& t,
                            double tol = kDefaultTol) {
    if (j >= b.dimension()) fail("IndexOutOfRange", "basis function index out of range");
    const Matrix<K> m = to_monomial_matrix(b, tol);
    K r(0);
    for (std::size_t i = order; i < b.dimension(); ++i)
        r += m(i, j) * detail::falling_factorial<K>(i, order) * detail::kpow(t, i - order);
    return r;
}

// Coordinate vectors of the constant 1 and of t in basis b; these are the
// first two rows of the transposed monomial-to-b change matrix.
template <class K>
std::pair<std::vector<K>, std::vector<K>> coords_of_one_and_t(const Basis<K>& b) {
    if (b.degree() < 1) fail("BadDegree", "coords_of_one_and_t needs degree >= 1");
    const std::size_t n = b.dimension();
    std::vector<K> one(n, K(0)), t(n, K(0));
    switch (b.kind()) {
        case BasisKind::Monomial:
            one[0] = K(1);
            t[1] = K(1);
            break;
        case BasisKind::Bernstein:
            // partition of unity, and t = sum_j (j/d) B_j
            for (std::size_t j = 0; j < n; ++j) {
                one[j] = K(1);
                t[j] = K(static_cast<long long>(j)) / K(static_cast<long long>(b.degree()));
            }
            break;
        case BasisKind::Lagrange:
            for (std::size_t j = 0; j < n; ++j) {
                one[j] = K(1);
                t[j] = b.nodes()[j];
            }
            break;
        case BasisKind::Hermite: {
            // interpolation data of 1 is (1, 0, ...) per node; of t it is
            // (tau, 1, 0, ...) per node
            std::size_t row = 0;
            for (std::size_t node = 0; node < b.nodes().size(); ++node) {
                for (int delta = 0; delta < b.confluencies()[node]; ++delta, ++row) {
                    if (delta == 0) {
                        one[row] = K(1);
                        t[row] = b.nodes()[node];
                    } else if (delta == 1) {
                        t[row] = K(1);
                    }
                }
            }
            break;
        }
    }
    return {std::move(one), std::move(t)};
}

// Drops the last basis element / interpolation condition, producing a basis
// of degree one less. For Hermite the top derivative condition of the last
// node goes first; the node itself is removed once its confluency hits zero.
template <class K>
Basis<K> truncated(const Basis<K>& b) {
    if (b.degree() < 1) fail("BadDegree", "cannot truncate a degree-0 basis");
    switch (b.kind()) {
        case BasisKind::Monomial:
            return Basis<K>::monomial(b.degree() - 1);
        case BasisKind::Bernstein:
            return Basis<K>::bernstein(b.degree() - 1);
        case BasisKind::Lagrange: {
            std::vector<K> nodes(b.nodes().begin(), b.nodes().end() - 1);
            return Basis<K>::lagrange(std::move(nodes));
        }
        case BasisKind::Hermite: {
            std::vector<K> nodes = b.nodes();
            std::vector<int> confluencies = b.confluencies();
            if (--confluencies.back() == 0) {
                nodes.pop_back();
                confluencies.pop_back();
            }
            return Basis<K>::hermite(std::move(nodes), std::move(confluencies));
        }
    }
    fail("BadBasis", "unknown basis kind");
}

template <class K>
Basis<K> truncated_to_degree(const Basis<K>& b, std::size_t degree) {
    if (degree > b.degree()) fail("BadDegree", "cannot truncate to a larger degree");
    Basis<K> r = b;
    while (r.degree() > degree) r = truncated(r);
    return r;
}

} // namespace bezout
