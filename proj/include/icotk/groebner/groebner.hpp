#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "icotk/algebra/poly.hpp"
#include "icotk/groebner/order.hpp"

namespace icotk {

/// Effort limit for Gröbner computations, counted in reduction steps (one
/// step = one elimination of a term by a basis element).
struct GbBudget {
  std::uint64_t steps = 0;  // 0 means "use the process default"
};

/// Process-wide default budget, 10^7 steps unless changed (the CLI's --gb-steps).
std::uint64_t default_gb_steps();
void set_default_gb_steps(std::uint64_t steps);

/// Polynomial ideal with a per-order cache of reduced Gröbner bases.
///
/// Copies share the cache. Each (ideal, order) basis is computed at most once
/// even under concurrent access; published bases are immutable.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Poly> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }
  bool is_homogeneous() const;

  /// Reduced basis, primitive integer elements with positive leading
  /// coefficient, sorted by increasing leading monomial.
  const std::vector<Poly>& basis(const MonomialOrder& ord = MonomialOrder::grevlex(), GbBudget budget = {}) const;

 private:
  struct Entry {
    std::once_flag once;
    std::vector<Poly> basis;
  };
  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::shared_ptr<Entry>> entries;
  };

  RingPtr ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Buchberger's algorithm (sugar strategy, Gebauer-Möller criteria). Throws
/// BudgetExceeded when the step budget runs out.
std::vector<Poly> groebner_basis(const std::vector<Poly>& generators, const MonomialOrder& ord, GbBudget budget = {});

/// Remainder of p modulo a Gröbner basis `gb` for `ord`, fully reduced.
Poly reduce(const Poly& p, const std::vector<Poly>& gb, const MonomialOrder& ord, GbBudget budget = {});
Poly normal_form(const Poly& p, const Ideal& I, const MonomialOrder& ord = MonomialOrder::grevlex(), GbBudget budget = {});

/// True iff every S-polynomial of `gb` reduces to zero modulo `gb`.
bool satisfies_buchberger_criterion(const std::vector<Poly>& gb, const MonomialOrder& ord, GbBudget budget = {});

/// I intersected with the subring in the variables outside `first_block`.
/// The result lives in a ring of the remaining variables (same names).
Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& first_block, GbBudget budget = {});
/// I : g^infinity by adjoining 1 - w g and eliminating w.
Ideal saturate(const Ideal& I, const Poly& g, GbBudget budget = {});
/// True iff p vanishes on V(I) over the algebraic closure.
bool radical_member(const Poly& p, const Ideal& I, GbBudget budget = {});

/// Hilbert series data of ring/I for homogeneous I, read off the grevlex
/// leading-term ideal.
struct HilbertData {
  std::size_t nvars = 0;
  /// Numerator of the series over (1 - t)^nvars, index = power of t.
  std::vector<Int> numerator;
  /// Numerator after cancelling every factor (1 - t); the series is
  /// reduced / (1 - t)^(dimension + 1).
  std::vector<Int> reduced;
  int dimension = -1;  // projective dimension; -1 for the empty scheme
  Int degree = 0;
  /// Hilbert polynomial coefficients in the variable d, constant term first.
  std::vector<Rat> hilbert_polynomial;
  /// hilbert_function(d) equals the Hilbert polynomial for every d >= this.
  int regularity_index = 0;

  Int hilbert_function(long d) const;
  Rat hilbert_polynomial_at(const Rat& d) const;
};

/// Hilbert series numerator of ring/(monomials) over (1 - t)^nvars.
std::vector<Int> hilbert_numerator(std::vector<Monomial> monomials, std::size_t nvars);

HilbertData hilbert_data(const Ideal& I, GbBudget budget = {});
Int hilbert_function(const Ideal& I, long d, GbBudget budget = {});
/// Counts the degree-d monomials outside the grevlex leading-term ideal directly.
Int count_standard_monomials(const Ideal& I, unsigned d, GbBudget budget = {});
std::pair<int, Int> dim_degree(const Ideal& I, GbBudget budget = {});
/// 1 - P(0) for a one-dimensional homogeneous ideal; DomainError otherwise.
Int arithmetic_genus(const Ideal& I, GbBudget budget = {});

}  // namespace icotk
