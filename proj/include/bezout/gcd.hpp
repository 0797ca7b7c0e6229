#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bezout/bezout_matrix.hpp"
#include "bezout/kernel.hpp"

namespace bezout {

enum class GcdMethod { BarnettPhi, NullspacePhi, EuclidOracle };

inline const char* method_name(GcdMethod m) {
    switch (m) {
        case GcdMethod::BarnettPhi: return "barnett";
        case GcdMethod::NullspacePhi: return "nullspace";
        case GcdMethod::EuclidOracle: return "euclid";
    }
    return "?";
}

// Monic gcd in monomial coefficients, highest power first (leading entry is
// always 1), plus the witnesses of the method that produced it. In floating
// mode the coefficients are best-effort and authoritative is false.
template <class K>
struct GcdResult {
    std::vector<K> monic_coeffs; // high-to-low, size degree+1
    std::size_t degree = 0;
    GcdMethod method = GcdMethod::EuclidOracle;
    std::size_t rank = 0; // n - degree
    bool authoritative = true;
    std::optional<Matrix<K>> witness_h;         // Barnett combination coefficients
    std::optional<Matrix<K>> witness_nullspace; // null-space basis N
    std::optional<Matrix<K>> witness_z;         // top rows of P(St->phi)^T N
};

namespace detail {

// Trims trailing (near-)zero coefficients; empty result means the zero
// polynomial.
template <class K>
std::vector<K> trimmed(std::vector<K> c, double tol) {
    double threshold = 0.0;
    if constexpr (!ScalarTraits<K>::is_exact) {
        for (const K& x : c) threshold = std::max(threshold, ScalarTraits<K>::magnitude(x));
        threshold *= tol;
    }
    while (!c.empty() && ScalarTraits<K>::is_zero(c.back(), threshold)) c.pop_back();
    return c;
}

// Remainder of a by b (ascending coefficients, b nonzero with exact leading
// coefficient), trimmed.
template <class K>
std::vector<K> poly_mod(std::vector<K> a, const std::vector<K>& b, double tol) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const K factor = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        a.pop_back();
        a = trimmed(std::move(a), tol);
        if (a.empty()) break;
    }
    return a;
}

template <class K>
std::vector<K> make_monic(std::vector<K> c) {
    const K lead = c.back();
    for (K& x : c) x /= lead;
    c.back() = K(1);
    return c;
}

template <class K>
std::vector<K> euclid_pair(std::vector<K> a, std::vector<K> b, double tol) {
    while (!b.empty()) {
        std::vector<K> r = poly_mod(std::move(a), b, tol);
        a = std::move(b);
        b = std::move(r);
        if (!b.empty()) b = make_monic(std::move(b)); // tame coefficient growth
    }
    return make_monic(std::move(a));
}

template <class K>
GcdResult<K> from_ascending_monic(std::vector<K> ascending, GcdMethod method, std::size_t n) {
    GcdResult<K> result;
    result.degree = ascending.size() - 1;
    result.method = method;
    result.rank = n - result.degree;
    result.authoritative = ScalarTraits<K>::is_exact;
    result.monic_coeffs.assign(ascending.rbegin(), ascending.rend());
    return result;
}

} // namespace detail

// deg gcd(P, Q_1, ..., Q_r) = n - rank of the stacked Bezout matrix.
template <class K>
std::size_t gcd_degree(const StackedBezout<K>& stack, double tol = kDefaultTol) {
    return stack.n - rank(stack.matrix, tol);
}

// Barnett's method on T = B^P_phi * P(phi->St)^T: with rank n-k, the last
// n-k columns of T are independent and expressing column j (j <= k) in terms
// of them yields the gcd coefficients; column indices correspond to
// ascending monomial degree. Fails with RankAssumptionViolated when the
// trailing columns are dependent, which only floating arithmetic can produce.
template <class K>
GcdResult<K> barnett_gcd(const StackedBezout<K>& stack, double tol = kDefaultTol) {
    const std::size_t n = stack.n;
    const std::size_t k = gcd_degree(stack, tol);
    if (k == n)
        fail("ProportionalInputs",
             "zero stacked matrix: gcd equals P, which the stack does not determine");
    Matrix<K> t = stack.matrix;
    if (stack.basis.kind() != BasisKind::Monomial)
        t = t * to_monomial_matrix(stack.basis, tol).transpose();
    if (k == 0) return detail::from_ascending_monic<K>({K(1)}, GcdMethod::BarnettPhi, n);

    const Matrix<K> trailing = t.block(0, k, t.rows(), n - k);
    if (rank(trailing, tol) != n - k)
        fail("RankAssumptionViolated", "trailing n-k columns of T are linearly dependent");
    Matrix<K> h;
    try {
        h = solve_full_column_rank(trailing, t.block(0, 0, t.rows(), k), tol);
    } catch (const Error& e) {
        fail("RankAssumptionViolated", std::string("column decomposition failed: ") + e.what());
    }
    std::vector<K> ascending(k + 1);
    for (std::size_t m = 0; m < k; ++m) ascending[m] = h(0, m); // h^{k+1}_m
    ascending[k] = K(1);
    GcdResult<K> result = detail::from_ascending_monic(std::move(ascending),
                                                       GcdMethod::BarnettPhi, n);
    result.witness_h = std::move(h);
    return result;
}

// Null-space method: with N a null-space basis of the stack and Z the first
// k+1 rows of P(St->phi)^T N, the monic gcd coefficients solve
// (d_k, ..., d_1, 1) Z = 0.
template <class K>
GcdResult<K> nullspace_gcd(const StackedBezout<K>& stack, double tol = kDefaultTol) {
    const std::size_t n = stack.n;
    const Matrix<K> ns = null_space_basis(stack.matrix, tol);
    const std::size_t k = ns.cols();
    if (k == n)
        fail("ProportionalInputs",
             "zero stacked matrix: gcd equals P, which the stack does not determine");
    if (k == 0) return detail::from_ascending_monic<K>({K(1)}, GcdMethod::NullspacePhi, n);

    Matrix<K> adjusted = ns;
    if (stack.basis.kind() != BasisKind::Monomial)
        adjusted = from_monomial_matrix(stack.basis, tol).transpose() * ns;
    const Matrix<K> z = adjusted.block(0, 0, k + 1, k);
    // (d_k, ..., d_1, 1), which is already the ascending coefficient order of
    // t^k + d_1 t^{k-1} + ... + d_k
    std::vector<K> ascending = solve_left(z, tol);
    GcdResult<K> result =
        detail::from_ascending_monic(std::move(ascending), GcdMethod::NullspacePhi, n);
    result.witness_nullspace = ns;
    result.witness_z = z;
    return result;
}

// Exact Euclidean algorithm on monomial conversions, folded over the list;
// the reference oracle for the two matrix methods.
template <class K>
GcdResult<K> euclid_gcd(const std::vector<Poly<K>>& ps, double tol = kDefaultTol) {
    std::vector<K> g;
    std::size_t n = 0;
    bool any = false;
    for (const Poly<K>& p : ps) {
        std::vector<K> c = detail::trimmed(monomial_coeffs(p, tol), tol);
        if (c.empty()) continue;
        n = std::max(n, c.size() - 1);
        if (!any) {
            g = detail::make_monic(std::move(c));
            any = true;
        } else if (g.size() > 1) {
            g = detail::euclid_pair(std::move(g), std::move(c), tol);
        }
    }
    if (!any) fail("AllZero", "gcd of all-zero polynomials");
    return detail::from_ascending_monic(std::move(g), GcdMethod::EuclidOracle, n);
}

// Basis selection for the front-door gcd: an explicit basis of degree n-1, or
// NativeBasis (truncate the inputs' shared basis, error when they disagree),
// or Auto (shared basis when there is one, monomial otherwise).
struct NativeBasis {};
template <class K>
using PhiSpec = std::variant<std::monostate, NativeBasis, Basis<K>>;

// Front door: designates the first maximal-effective-degree input as P,
// stacks the rest against it and dispatches to the requested method.
template <class K>
GcdResult<K> gcd(const std::vector<Poly<K>>& ps, GcdMethod method,
                 const PhiSpec<K>& phi_spec = {}, double tol = kDefaultTol) {
    if (ps.size() < 2) fail("BadArity", "gcd needs at least two polynomials");
    if (method == GcdMethod::EuclidOracle) return euclid_gcd(ps, tol);

    int n = -1;
    std::size_t p_index = 0;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const int d = effective_degree(ps[i], tol);
        if (d > n) {
            n = d;
            p_index = i;
        }
    }
    if (n < 0) fail("AllZero", "gcd of all-zero polynomials");
    if (n == 0) return detail::from_ascending_monic<K>({K(1)}, method, 0);

    const bool shared_basis = [&] {
        for (const Poly<K>& p : ps)
            if (!(p.basis == ps.front().basis)) return false;
        return true;
    }();
    const std::size_t target_degree = static_cast<std::size_t>(n) - 1;
    Basis<K> phi = Basis<K>::monomial(target_degree);
    if (std::holds_alternative<Basis<K>>(phi_spec)) {
        phi = std::get<Basis<K>>(phi_spec);
        if (phi.degree() != target_degree)
            fail("BasisDegreeMismatch",
                 "gcd basis must have degree " + std::to_string(target_degree));
    } else if (std::holds_alternative<NativeBasis>(phi_spec)) {
        if (!shared_basis) fail("MixedBases", "native basis requested but inputs disagree");
        phi = truncated_to_degree(ps.front().basis, target_degree);
    } else if (shared_basis) {
        phi = truncated_to_degree(ps.front().basis, target_degree);
    }

    std::vector<Poly<K>> qs;
    qs.reserve(ps.size() - 1);
    for (std::size_t i = 0; i < ps.size(); ++i)
        if (i != p_index) qs.push_back(ps[i]);
    const StackedBezout<K> stack = stacked(ps[p_index], qs, phi, tol);

    if (gcd_degree(stack, tol) == static_cast<std::size_t>(n)) {
        // zero stack: every Q_i is proportional to P, so the gcd is monic P
        std::vector<K> c = detail::trimmed(monomial_coeffs(ps[p_index], tol), tol);
        return detail::from_ascending_monic(detail::make_monic(std::move(c)), method,
                                            static_cast<std::size_t>(n));
    }
    return method == GcdMethod::BarnettPhi ? barnett_gcd(stack, tol) : nullspace_gcd(stack, tol);
}

} // namespace bezout
