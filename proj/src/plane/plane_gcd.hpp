#pragma once

// Internal gcd helpers for ternary forms, by primitive pseudo-remainder
// sequences in Q[y][x] after dehomogenizing at z = 1.

#include <array>

#include "icotk/algebra/poly.hpp"
#include "icotk/algebra/univariate.hpp"

namespace icotk::detail {

/// Greatest common divisor of two homogeneous polynomials in x, y, z
/// (primitive, defined up to sign). Either may be zero, not both.
Poly ternary_gcd(const Poly& a, const Poly& b);

/// p(P + t Q) as a polynomial in t, for p in three variables.
UPoly restrict_to_line(const Poly& p, const std::array<Int, 3>& P, const std::array<Int, 3>& Q);

/// Product of the distinct irreducible factors of a homogeneous F (primitive).
Poly ternary_squarefree(const Poly& F);

}  // namespace icotk::detail
