#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace icotk {

using Int = mpz_class;
using Rat = mpq_class;

/// Effort limits for integer factorization. Trial division runs up to
/// `trial_limit`; Pollard rho then gets `rho_iterations` steps per split.
struct FactorBudget {
  std::uint64_t trial_limit = 1'000'000;
  std::uint64_t rho_iterations = 2'000'000;
};

/// Distinct prime divisors of |n| in increasing order. Throws UnfactoredInput
/// when the budget runs out and DomainError for n = 0.
std::vector<Int> prime_factors(const Int& n, const FactorBudget& budget = {});

/// rad(|n|), the product of the distinct primes dividing n; rad(±1) = 1.
Int int_radical(const Int& n, const FactorBudget& budget = {});

/// True iff every prime factor of the reduced numerator and denominator of q
/// lies in `primes` (q must be nonzero).
bool is_s_unit(const Rat& q, const std::vector<Int>& primes);

std::string to_string(const Int& n);
std::string to_string(const Rat& q);

/// Parses "a", "-a" or "a/b" into a reduced rational.
Rat parse_rational(const std::string& text);

inline Rat make_rat(const Int& num, const Int& den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace icotk
