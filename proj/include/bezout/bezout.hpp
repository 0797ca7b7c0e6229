#pragma once

// Umbrella header: Bezout matrices of univariate polynomials in arbitrary
// bases, the null-space structure attached to common roots, and gcd
// computation by Barnett's method and by the null-space method.

#include "bezout/basis.hpp"
#include "bezout/bezout_matrix.hpp"
#include "bezout/errors.hpp"
#include "bezout/gcd.hpp"
#include "bezout/kernel.hpp"
#include "bezout/linalg.hpp"
#include "bezout/matrix.hpp"
#include "bezout/poly.hpp"
#include "bezout/rational.hpp"
#include "bezout/scalar.hpp"
