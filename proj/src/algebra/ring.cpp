#include "icotk/algebra/ring.hpp"

#include <algorithm>
#include <set>

#include "icotk/errors.hpp"

namespace icotk {

Ring::Ring(std::vector<std::string> names, CoefficientDomain domain)
    : names_(std::move(names)), domain_(domain) {
  if (names_.size() > kMaxVars) throw DomainError("ring has too many variables");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw DomainError("ring variable names must be unique");
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const Ring>(std::move(names));
}

RingPtr p2_ring() {
  static const RingPtr ring = make_ring({"x", "y", "z"});
  return ring;
}

RingPtr p4_ring() {
  static const RingPtr ring = make_ring({"x0", "x1", "x2", "x3", "x4"});
  return ring;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const unsigned e = unsigned(exp[i]) + o.exp[i];
    if (e > 0xFFFF) throw DomainError("monomial exponent overflow");
    r.exp[i] = static_cast<std::uint16_t>(e);
  }
  r.deg = deg + o.deg;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (deg > o.deg) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] > o.exp[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(exp[i] - o.exp[i]);
  r.deg = deg - o.deg;
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp[i] = std::max(exp[i], o.exp[i]);
    r.deg += r.exp[i];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp[i] = std::min(exp[i], o.exp[i]);
    r.deg += r.exp[i];
  }
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] && o.exp[i]) return false;
  return true;
}

int grevlex_compare(const Monomial& a, const Monomial& b, std::size_t n) {
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  for (std::size_t i = n; i-- > 0;) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? -1 : 1;
  }
  return 0;
}

namespace {
void fill(std::size_t n, std::size_t var, unsigned left, Monomial& cur, std::vector<Monomial>& out) {
  if (var + 1 == n) {
    cur.set(var, static_cast<std::uint16_t>(left));
    out.push_back(cur);
    cur.set(var, 0);
    return;
  }
  for (unsigned e = left + 1; e-- > 0;) {
    cur.set(var, static_cast<std::uint16_t>(e));
    fill(n, var + 1, left - e, cur, out);
  }
  cur.set(var, 0);
}
}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Monomial cur;
  fill(n, 0, d, cur, out);
  std::sort(out.begin(), out.end(),
            [n](const Monomial& a, const Monomial& b) { return grevlex_compare(a, b, n) > 0; });
  return out;
}

}  // namespace icotk
