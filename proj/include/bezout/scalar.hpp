#pragma once

#include <cmath>
#include <cstdlib>

#include "bezout/rational.hpp"

namespace bezout {

// Default relative tolerance for the floating scalar mode. Zero tests inside
// elimination compare |x| against tol * (largest absolute entry of the matrix
// being eliminated). Exact mode ignores tolerances entirely.
inline constexpr double kDefaultTol = 1e-9;

template <class K>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr bool is_exact = true;
    static bool is_zero(const Rational& x, double /*threshold*/) { return x.is_zero(); }
    static double magnitude(const Rational& x) { return std::abs(x.to_double()); }
};

template <>
struct ScalarTraits<double> {
    static constexpr bool is_exact = false;
    static bool is_zero(double x, double threshold) { return std::abs(x) <= threshold; }
    static double magnitude(double x) { return std::abs(x); }
};

} // namespace bezout
