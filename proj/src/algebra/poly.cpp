#include "icotk/algebra/poly.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "icotk/errors.hpp"

namespace icotk {
namespace {

struct GrevlexGreater {
  std::size_t n;
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b, n) > 0; }
};

void check_ring(const Poly& a, const Poly& b) {
  if (!same_ring(a.ring(), b.ring())) throw DomainError("polynomials live in different rings");
}

// Integer coefficient vector sharing one denominator; used by the hot loops.
struct Scaled {
  Int den;
  std::vector<std::pair<Monomial, Int>> terms;
};

Scaled scaled(const Poly& p) {
  Scaled s{p.denominator_lcm(), {}};
  s.terms.reserve(p.size());
  for (const auto& t : p.terms()) s.terms.emplace_back(t.mono, t.coeff.get_num() * (s.den / t.coeff.get_den()));
  return s;
}

}  // namespace

Poly Poly::constant(RingPtr ring, const Rat& c) {
  Poly p(std::move(ring));
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Poly Poly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw DomainError("variable index out of range");
  return monomial(std::move(ring), Monomial::variable(index));
}

Poly Poly::monomial(RingPtr ring, const Monomial& m, const Rat& c) {
  Poly p(std::move(ring));
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
  const std::size_t n = ring->size();
  std::sort(terms.begin(), terms.end(),
            [n](const Term& a, const Term& b) { return grevlex_compare(a.mono, b.mono, n) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return Poly(std::move(ring), std::move(out));
}

int Poly::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.deg));
  return d;
}

bool Poly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.deg != terms_.front().mono.deg) return false;
  return true;
}

Rat Poly::coefficient(const Monomial& m) const {
  const std::size_t n = ring_->size();
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [n](const Term& t, const Monomial& v) { return grevlex_compare(t.mono, v, n) > 0; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

unsigned Poly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono[var]);
  return d;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  check_ring(*this, o);
  const std::size_t n = ring_->size();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c;
    if (i == terms_.size()) c = -1;
    else if (j == o.terms_.size()) c = 1;
    else c = grevlex_compare(terms_[i].mono, o.terms_[j].mono, n);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Rat s = terms_[i].coeff + o.terms_[j].coeff;
      if (s != 0) out.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  return Poly(ring_, std::move(out));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Rat& c) const {
  if (c == 0) return Poly(ring_);
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_ring(*this, o);
  if (is_zero() || o.is_zero()) return Poly(ring_);
  const Scaled a = scaled(*this);
  const Scaled b = scaled(o);
  std::unordered_map<Monomial, Int, MonomialHash> acc;
  acc.reserve(a.terms.size() * b.terms.size() / 2 + 16);
  for (const auto& [ma, ca] : a.terms) {
    for (const auto& [mb, cb] : b.terms) {
      Int& slot = acc[ma * mb];
      mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  }
  const Int den = a.den * b.den;
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c == 0) continue;
    Rat q(c, den);
    q.canonicalize();
    out.push_back({m, std::move(q)});
  }
  const std::size_t n = ring_->size();
  std::sort(out.begin(), out.end(), [n](const Term& x, const Term& y) { return grevlex_compare(x.mono, y.mono, n) > 0; });
  return Poly(ring_, std::move(out));
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(ring_, 1);
  Poly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono[var] == 0) continue;
    Monomial m = t.mono;
    m.set(var, static_cast<std::uint16_t>(t.mono[var] - 1));
    out.push_back({m, t.coeff * t.mono[var]});
  }
  return from_terms(ring_, std::move(out));
}

Rat Poly::evaluate(std::span<const Rat> point) const {
  if (point.size() != ring_->size()) throw DomainError("evaluate: arity mismatch");
  Rat sum = 0;
  Rat term;
  for (const auto& t : terms_) {
    term = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (t.mono[i] == 0) continue;
      Rat pw;
      mpz_pow_ui(pw.get_num_mpz_t(), point[i].get_num_mpz_t(), t.mono[i]);
      mpz_pow_ui(pw.get_den_mpz_t(), point[i].get_den_mpz_t(), t.mono[i]);
      term *= pw;
    }
    sum += term;
  }
  return sum;
}

Rat Poly::evaluate(std::span<const Int> point) const {
  std::vector<Rat> q(point.begin(), point.end());
  return evaluate(std::span<const Rat>(q));
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (images.size() != ring_->size()) throw DomainError("substitute: arity mismatch");
  if (images.empty()) throw DomainError("substitute: empty ring");
  const RingPtr& target = images.front().ring();
  for (const auto& img : images) check_ring(img, images.front());
  // Powers of each image, grown on demand.
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t var, unsigned e) -> const Poly& {
    auto& pw = powers[var];
    if (pw.empty()) pw.push_back(constant(target, 1));
    while (pw.size() <= e) pw.push_back(pw.back() * images[var]);
    return pw[e];
  };
  std::unordered_map<Monomial, Rat, MonomialHash> acc;
  for (const auto& t : terms_) {
    Poly prod = constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (t.mono[i]) prod = prod * power(i, t.mono[i]);
    for (const auto& pt : prod.terms_) acc[pt.mono] += pt.coeff;
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({m, c});
  return from_terms(target, std::move(out));
}

Poly Poly::embed(const RingPtr& target) const {
  if (same_ring(ring_, target)) return Poly(target, terms_);
  std::vector<std::size_t> map(ring_->size());
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    auto idx = target->index_of(ring_->name(i));
    if (!idx) {
      if (degree_in(i) == 0) {
        map[i] = kMaxVars;
        continue;
      }
      throw DomainError("embed: variable " + ring_->name(i) + " missing from target ring");
    }
    map[i] = *idx;
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < ring_->size(); ++i)
      if (t.mono[i]) m.set(map[i], t.mono[i]);
    out.push_back({m, t.coeff});
  }
  return from_terms(target, std::move(out));
}

bool Poly::has_integer_coefficients() const {
  for (const auto& t : terms_)
    if (t.coeff.get_den() != 1) return false;
  return true;
}

Int Poly::denominator_lcm() const {
  Int l = 1;
  for (const auto& t : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  return l;
}

Poly exact_div(const Poly& p, const Poly& divisor) {
  check_ring(p, divisor);
  if (divisor.is_zero()) throw DomainError("exact_div: division by zero");
  if (p.is_zero()) return Poly(p.ring());
  const std::size_t n = p.ring()->size();
  const auto& lead = divisor.leading_term();
  std::map<Monomial, Rat, GrevlexGreater> rem{GrevlexGreater{n}};
  for (const auto& t : p.terms()) rem.emplace(t.mono, t.coeff);
  std::vector<Poly::Term> quotient;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lead.mono.divides(it->first)) throw NotDivisible();
    const Monomial q = it->first.quotient(lead.mono);
    const Rat c = it->second / lead.coeff;
    quotient.push_back({q, c});
    for (const auto& t : divisor.terms()) {
      auto [slot, inserted] = rem.try_emplace(q * t.mono, 0);
      slot->second -= c * t.coeff;
      if (slot->second == 0) rem.erase(slot);
    }
  }
  return Poly::from_terms(p.ring(), std::move(quotient));
}

std::pair<Rat, Poly> content_primitive(const Poly& p) {
  if (p.is_zero()) throw DomainError("content_primitive: zero polynomial");
  Int g = 0;
  for (const auto& t : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
  Rat c = make_rat(g, p.denominator_lcm());
  if (p.leading_term().coeff < 0) c = -c;
  return {c, p * (1 / c)};
}

Poly elementary_symmetric(const RingPtr& ring, unsigned k, unsigned m) {
  if (k < 1 || k > m || m > ring->size()) throw DomainError("elementary_symmetric: k out of range");
  std::vector<Poly::Term> terms;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    Monomial mono;
    for (unsigned i = 0; i < m; ++i)
      if (pick[i]) mono.set(i, 1);
    terms.push_back({mono, 1});
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return Poly::from_terms(ring, std::move(terms));
}

}  // namespace icotk
