#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bezout/basis.hpp"

namespace bezout {

// A polynomial as a coordinate vector relative to a declared basis. The
// declared degree is part of the value; trailing zeros are legal and kept.
// For Hermite bases the coordinates are the interpolation data, node-major
// and derivative-minor (value, then derivatives, per node).
template <class K>
struct Poly {
    Basis<K> basis;
    std::vector<K> coeffs;
};

template <class K>
Poly<K> make_poly(Basis<K> basis, std::vector<K> coeffs) {
    if (coeffs.size() != basis.dimension())
        fail("BadPoly", "expected " + std::to_string(basis.dimension()) + " coefficients, got " +
                            std::to_string(coeffs.size()));
    return {std::move(basis), std::move(coeffs)};
}

// Monomial coefficient vector (ascending powers, length declared degree + 1).
template <class K>
std::vector<K> monomial_coeffs(const Poly<K>& p, double tol = kDefaultTol) {
    if (p.basis.kind() == BasisKind::Monomial) return p.coeffs;
    return to_monomial_matrix(p.basis, tol) * p.coeffs;
}

// Degree of p as a polynomial function: the largest power with a nonzero
// monomial coefficient, or -1 for the zero polynomial. The floating mode
// treats coefficients within tol * max|coeff| as zero.
template <class K>
int effective_degree(const Poly<K>& p, double tol = kDefaultTol) {
    const std::vector<K> c = monomial_coeffs(p, tol);
    double threshold = 0.0;
    if constexpr (!ScalarTraits<K>::is_exact) {
        for (const K& x : c) threshold = std::max(threshold, ScalarTraits<K>::magnitude(x));
        threshold *= tol;
    }
    for (std::size_t i = c.size(); i-- > 0;)
        if (!ScalarTraits<K>::is_zero(c[i], threshold)) return static_cast<int>(i);
    return -1;
}

// Same polynomial function expressed in basis `to` (of the same degree).
template <class K>
Poly<K> convert(const Poly<K>& p, const Basis<K>& to, double tol = kDefaultTol) {
    if (to.degree() != p.basis.degree())
        fail("DegreeMismatch", "conversion target must have the same degree");
    if (to == p.basis) return p;
    return {to, change_matrix(p.basis, to, tol).matrix * p.coeffs};
}

template <class K>
K eval(const Poly<K>& p, const K& t, double tol = kDefaultTol) {
    return detail::poly_eval(monomial_coeffs(p, tol), t);
}

} // namespace bezout
