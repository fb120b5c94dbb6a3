#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "icotk/algebra/integer.hpp"
#include "icotk/algebra/ring.hpp"

namespace icotk {

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept sorted by decreasing graded reverse lexicographic order
/// with no zero coefficients, so two polynomials are equal iff their term
/// vectors are equal. Values are immutable in practice: every operation
/// returns a new Poly.
class Poly {
 public:
  struct Term {
    Monomial mono;
    Rat coeff;
    bool operator==(const Term& o) const { return mono == o.mono && coeff == o.coeff; }
  };

  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly constant(RingPtr ring, const Rat& c);
  static Poly variable(RingPtr ring, std::size_t index);
  static Poly monomial(RingPtr ring, const Monomial& m, const Rat& c = 1);
  /// Builds a polynomial from unsorted terms, merging duplicates and dropping zeros.
  static Poly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.deg == 0); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  /// Leading term under grevlex. Precondition: nonzero.
  const Term& leading_term() const { return terms_.front(); }
  Rat coefficient(const Monomial& m) const;
  /// Largest exponent of variable `var` occurring in any term.
  unsigned degree_in(std::size_t var) const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& c) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const { return same_ring(ring_, o.ring_) && terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly pow(unsigned e) const;
  Poly derivative(std::size_t var) const;

  Rat evaluate(std::span<const Rat> point) const;
  Rat evaluate(std::span<const Int> point) const;
  /// Composition p(images_0, ..., images_{n-1}); the result lives in the
  /// images' common ring.
  Poly substitute(const std::vector<Poly>& images) const;
  /// Re-expresses the polynomial in `target`, matching variables by name.
  Poly embed(const RingPtr& target) const;

  bool has_integer_coefficients() const;
  /// Least common multiple of the coefficient denominators.
  Int denominator_lcm() const;

  /// Canonical text form; parses back to the same polynomial.
  std::string to_string() const;

 private:
  Poly(RingPtr ring, std::vector<Term> sorted_terms)
      : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

/// q such that p = q * divisor. Throws NotDivisible if the division leaves a remainder.
Poly exact_div(const Poly& p, const Poly& divisor);

/// (c, q) with p = c * q, q integral with coefficient gcd 1 and positive grevlex
/// leading coefficient. Throws DomainError for the zero polynomial.
std::pair<Rat, Poly> content_primitive(const Poly& p);

inline Poly primitive_part(const Poly& p) { return content_primitive(p).second; }

/// sigma_k in the first m variables of `ring`.
Poly elementary_symmetric(const RingPtr& ring, unsigned k, unsigned m);

/// Parses the ASCII polynomial grammar (integers or a/b coefficients, `*`,
/// `^`, parentheses, +/-) over the variables of `ring`.
Poly poly_parse(const std::string& text, const RingPtr& ring);

}  // namespace icotk
