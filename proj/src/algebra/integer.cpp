#include "icotk/algebra/integer.hpp"

#include <algorithm>
#include <mutex>

#include "icotk/errors.hpp"

namespace icotk {
namespace {

const std::vector<std::uint32_t>& small_primes(std::uint64_t limit) {
  static std::mutex mu;
  static std::vector<std::uint32_t> primes;
  static std::uint64_t sieved = 0;
  std::lock_guard<std::mutex> lock(mu);
  if (sieved < limit) {
    std::vector<bool> composite(limit + 1, false);
    primes.clear();
    for (std::uint64_t i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      primes.push_back(static_cast<std::uint32_t>(i));
      for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    sieved = limit;
  }
  return primes;
}

bool probably_prime(const Int& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

// Brent's variant of Pollard rho. Returns a nontrivial factor or 0.
Int pollard_rho(const Int& n, std::uint64_t max_iter) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1; c < 20; ++c) {
    Int y = 2, x, g = 1, q = 1, ys;
    std::uint64_t r = 1, iter = 0;
    const std::uint64_t m = 128;
    auto f = [&](const Int& v) {
      Int t = v * v + c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return t;
    };
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        const std::uint64_t lim = std::min(m, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          y = f(y);
          Int d = abs(x - y);
          q = q * d;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += lim;
        iter += lim;
        if (iter > max_iter) return 0;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        Int d = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
  return 0;
}

void split(const Int& n, const FactorBudget& budget, std::vector<Int>& out) {
  if (n == 1) return;
  if (probably_prime(n)) {
    out.push_back(n);
    return;
  }
  Int d = pollard_rho(n, budget.rho_iterations);
  if (d == 0) throw UnfactoredInput("unfactored input: " + n.get_str());
  split(d, budget, out);
  split(n / d, budget, out);
}

}  // namespace

std::vector<Int> prime_factors(const Int& n, const FactorBudget& budget) {
  if (n == 0) throw DomainError("prime_factors: zero has no factorization");
  Int m = abs(n);
  std::vector<Int> out;
  for (std::uint32_t p : small_primes(std::max<std::uint64_t>(budget.trial_limit, 2))) {
    if (Int(p) * p > m) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      out.emplace_back(p);
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    }
  }
  if (m > 1) split(m, budget, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Int int_radical(const Int& n, const FactorBudget& budget) {
  if (n == 0) throw DomainError("int_radical: n must be nonzero");
  Int r = 1;
  for (const Int& p : prime_factors(n, budget)) r *= p;
  return r;
}

bool is_s_unit(const Rat& q, const std::vector<Int>& primes) {
  if (q == 0) return false;
  for (Int part : {Int(abs(q.get_num())), Int(q.get_den())}) {
    for (const Int& p : primes) {
      while (mpz_divisible_p(part.get_mpz_t(), p.get_mpz_t())) part /= p;
    }
    if (part != 1) return false;
  }
  return true;
}

std::string to_string(const Int& n) { return n.get_str(); }

std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    Int den(text.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator in '" + text + "'");
    return make_rat(Int(text.substr(0, slash)), den);
  } catch (const std::invalid_argument&) {
    throw DomainError("not a rational number: '" + text + "'");
  }
}

}  // namespace icotk
