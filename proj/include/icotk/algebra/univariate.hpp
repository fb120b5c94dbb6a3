#pragma once

#include <vector>

#include "icotk/algebra/integer.hpp"
#include "icotk/algebra/poly.hpp"

namespace icotk {

/// Dense univariate polynomial over Q, coefficients from low to high degree.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& lead() const { return c_.back(); }

  UPoly operator*(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly derivative() const;
  UPoly monic() const;
  Rat evaluate(const Rat& t) const;

  /// Quotient and remainder of Euclidean division.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
  bool divides(const UPoly& other) const { return divmod(other, *this).second.is_zero(); }

 private:
  void trim();
  std::vector<Rat> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(UPoly a, UPoly b);
/// Product of the distinct irreducible factors of p (monic); p nonzero.
UPoly squarefree_part(const UPoly& p);

/// Binary form sum c_k u^k w^(d-k) of fixed degree d on P^1.
struct BinaryForm {
  unsigned degree = 0;
  std::vector<Rat> coeffs;  // size degree+1, index k is the u^k coefficient

  bool is_zero() const;
  /// Dehomogenization w = 1.
  UPoly affine() const { return UPoly(coeffs); }
  bool vanishes_at_infinity() const { return coeffs[degree] == 0; }

  /// Reads a homogeneous polynomial in a two-variable ring (u, w).
  static BinaryForm from_poly(const Poly& p, unsigned degree);
};

/// True iff every root of `g` on P^1 (over the algebraic closure) is a root
/// of `h`. Precondition: g nonzero.
bool roots_contained(const BinaryForm& g, const BinaryForm& h);

}  // namespace icotk
