#include <algorithm>

#include "icotk/errors.hpp"
#include "icotk/groebner/groebner.hpp"

namespace icotk {
namespace {

using Series = std::vector<Int>;

void add_into(Series& acc, const Series& s, std::size_t shift) {
  if (acc.size() < s.size() + shift) acc.resize(s.size() + shift);
  for (std::size_t i = 0; i < s.size(); ++i) acc[i + shift] += s[i];
}

Series multiply(const Series& a, const Series& b) {
  Series r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

void trim(Series& s) {
  while (s.size() > 1 && s.back() == 0) s.pop_back();
}

void minimalize(std::vector<Monomial>& ms) {
  std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) { return a.deg < b.deg; });
  std::vector<Monomial> out;
  for (const auto& m : ms) {
    bool redundant = false;
    for (const auto& o : out)
      if (o.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  ms = std::move(out);
}

// Pivot recursion: N(I) = N(I + (p)) + t^deg(p) N(I : p) with p a variable power.
Series numerator(std::vector<Monomial> ms, std::size_t n) {
  minimalize(ms);
  if (ms.empty()) return {1};
  std::size_t best = n;
  unsigned best_count = 1;
  for (std::size_t v = 0; v < n; ++v) {
    unsigned count = 0;
    for (const auto& m : ms)
      if (m[v]) ++count;
    if (count > best_count) {
      best_count = count;
      best = v;
    }
  }
  if (best == n) {
    // Pairwise coprime generators: the quotient is a complete intersection.
    Series s{1};
    for (const auto& m : ms) {
      Series f(m.deg + 1);
      f[0] += 1;
      f[m.deg] -= 1;
      s = multiply(s, f);
    }
    trim(s);
    return s;
  }
  std::uint16_t e = 0xFFFF;
  for (const auto& m : ms)
    if (m[best]) e = std::min(e, m[best]);
  const Monomial p = Monomial::variable(best, e);

  std::vector<Monomial> with = ms;
  with.push_back(p);
  std::vector<Monomial> colon;
  colon.reserve(ms.size());
  for (const auto& m : ms) {
    Monomial q = m;
    q.set(best, m[best] > e ? m[best] - e : 0);
    colon.push_back(q);
  }
  Series r = numerator(std::move(with), n);
  add_into(r, numerator(std::move(colon), n), e);
  trim(r);
  return r;
}

// C(x + k, k) as a polynomial in x, coefficients constant term first.
std::vector<Rat> shifted_binomial(long shift, int k) {
  // prod_{i=1}^{k} (x + shift + i) / k!
  std::vector<Rat> poly{Rat(1)};
  Rat fact = 1;
  for (int i = 1; i <= k; ++i) {
    std::vector<Rat> next(poly.size() + 1);
    const Rat c = shift + i;
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j] += poly[j] * c;
      next[j + 1] += poly[j];
    }
    poly = std::move(next);
    fact *= i;
  }
  for (auto& c : poly) c /= fact;
  return poly;
}

Int binomial(long top, long k) {
  if (k < 0 || top < k) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

std::vector<Int> hilbert_numerator(std::vector<Monomial> monomials, std::size_t nvars) {
  return numerator(std::move(monomials), nvars);
}

Int HilbertData::hilbert_function(long d) const {
  Int sum = 0;
  for (std::size_t j = 0; j < numerator.size(); ++j) {
    const long m = d - static_cast<long>(j);
    if (m < 0) break;
    sum += numerator[j] * binomial(m + static_cast<long>(nvars) - 1, static_cast<long>(nvars) - 1);
  }
  return sum;
}

Rat HilbertData::hilbert_polynomial_at(const Rat& d) const {
  Rat acc = 0;
  for (std::size_t i = hilbert_polynomial.size(); i-- > 0;) acc = acc * d + hilbert_polynomial[i];
  return acc;
}

HilbertData hilbert_data(const Ideal& I, GbBudget budget) {
  if (!I.is_homogeneous()) throw DomainError("hilbert data requires a homogeneous ideal");
  HilbertData h;
  h.nvars = I.ring()->size();
  std::vector<Monomial> lts;
  for (const auto& g : I.basis(MonomialOrder::grevlex(), budget)) lts.push_back(g.leading_term().mono);
  h.numerator = numerator(std::move(lts), h.nvars);

  Series q = h.numerator;
  int k = 0;
  const bool zero = q.size() == 1 && q[0] == 0;
  if (!zero) {
    for (;;) {
      Int at_one = 0;
      for (const auto& c : q) at_one += c;
      if (at_one != 0) break;
      // Synthetic division by (1 - t): quotient coefficient b_i = sum_{j<=i} a_j.
      Series b(q.size() - 1);
      Int run = 0;
      for (std::size_t i = 0; i + 1 < q.size(); ++i) {
        run += q[i];
        b[i] = run;
      }
      q = std::move(b);
      trim(q);
      ++k;
    }
  }
  h.reduced = q;
  const int affine_dim = zero ? 0 : static_cast<int>(h.nvars) - k;
  h.dimension = affine_dim - 1;
  if (zero || affine_dim == 0) {
    h.dimension = -1;
    h.regularity_index = static_cast<int>(h.numerator.size());
    return h;
  }
  for (const auto& c : q) h.degree += c;
  std::vector<Rat> hp(static_cast<std::size_t>(affine_dim));
  for (std::size_t j = 0; j < q.size(); ++j) {
    const auto b = shifted_binomial(-static_cast<long>(j), affine_dim - 1);
    for (std::size_t i = 0; i < b.size(); ++i) hp[i] += b[i] * q[j];
  }
  while (!hp.empty() && hp.back() == 0) hp.pop_back();
  h.hilbert_polynomial = std::move(hp);
  h.regularity_index = std::max(0, static_cast<int>(q.size()) - 1 - affine_dim + 1);
  return h;
}

Int hilbert_function(const Ideal& I, long d, GbBudget budget) { return hilbert_data(I, budget).hilbert_function(d); }

Int count_standard_monomials(const Ideal& I, unsigned d, GbBudget budget) {
  const auto& gb = I.basis(MonomialOrder::grevlex(), budget);
  Int count = 0;
  for (const auto& m : monomials_of_degree(I.ring()->size(), d)) {
    bool standard = true;
    for (const auto& g : gb)
      if (g.leading_term().mono.divides(m)) {
        standard = false;
        break;
      }
    if (standard) ++count;
  }
  return count;
}

std::pair<int, Int> dim_degree(const Ideal& I, GbBudget budget) {
  const auto h = hilbert_data(I, budget);
  return {h.dimension, h.degree};
}

Int arithmetic_genus(const Ideal& I, GbBudget budget) {
  const auto h = hilbert_data(I, budget);
  if (h.dimension != 1) throw DomainError("arithmetic_genus: ideal is not one-dimensional (dimension " +
                                          std::to_string(h.dimension) + ")");
  const Rat p0 = h.hilbert_polynomial_at(0);
  if (p0.get_den() != 1) throw Error("arithmetic_genus: non-integral Hilbert polynomial value");
  return 1 - p0.get_num();
}

}  // namespace icotk
