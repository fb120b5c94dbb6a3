#include "plane_gcd.hpp"

#include <algorithm>

#include "icotk/algebra/univariate.hpp"
#include "icotk/errors.hpp"

namespace icotk::detail {

namespace {

// Coefficients in x (low to high), each a polynomial in y.
using BPoly = std::vector<UPoly>;

void trim(BPoly& b) {
  while (!b.empty() && b.back().is_zero()) b.pop_back();
}

int xdeg(const BPoly& b) { return static_cast<int>(b.size()) - 1; }

UPoly scaled(const UPoly& p, const Rat& c) {
  std::vector<Rat> r = p.coeffs();
  for (auto& x : r) x *= c;
  return UPoly(std::move(r));
}

BPoly dehomogenize(const Poly& F) {
  BPoly b;
  std::vector<std::vector<Rat>> dense;
  for (const auto& t : F.terms()) {
    const std::size_t i = t.mono[0], j = t.mono[1];
    if (dense.size() <= i) dense.resize(i + 1);
    if (dense[i].size() <= j) dense[i].resize(j + 1);
    dense[i][j] += t.coeff;
  }
  for (auto& d : dense) b.emplace_back(std::move(d));
  trim(b);
  return b;
}

int total_degree(const BPoly& b) {
  int d = -1;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!b[i].is_zero()) d = std::max(d, static_cast<int>(i) + b[i].degree());
  return d;
}

Poly homogenize(const BPoly& b, const RingPtr& ring) {
  const int D = total_degree(b);
  std::vector<Poly::Term> ts;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b[i].coeffs().size(); ++j) {
      if (b[i].coeffs()[j] == 0) continue;
      Monomial m;
      m.set(0, static_cast<std::uint16_t>(i));
      m.set(1, static_cast<std::uint16_t>(j));
      m.set(2, static_cast<std::uint16_t>(D - static_cast<int>(i + j)));
      ts.push_back({m, b[i].coeffs()[j]});
    }
  return Poly::from_terms(ring, std::move(ts));
}

UPoly content(const BPoly& b) {
  UPoly g;
  for (const auto& c : b) g = gcd(g, c);
  return g;
}

BPoly primitive(const BPoly& b) {
  const UPoly g = content(b);
  BPoly r;
  for (const auto& c : b) r.push_back(UPoly::divmod(c, g).first);
  // Fix the scalar so the leading coefficient is monic; keeps sizes in check.
  const Rat inv = 1 / r.back().lead();
  for (auto& c : r) c = scaled(c, inv);
  return r;
}

BPoly scalar_normalized(BPoly b) {
  const Rat inv = 1 / b.back().lead();
  for (auto& c : b) c = scaled(c, inv);
  return b;
}

BPoly pseudo_remainder(BPoly r, const BPoly& b) {
  const UPoly& lb = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    const UPoly lr = r.back();
    const std::size_t k = r.size() - b.size();
    for (auto& c : r) c = c * lb;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = r[k + j] - lr * b[j];
    trim(r);
  }
  return r;
}

BPoly bgcd(BPoly a, BPoly b) {
  trim(a);
  trim(b);
  if (a.empty()) return b.empty() ? b : scalar_normalized(b);
  if (b.empty()) return scalar_normalized(a);
  const UPoly c = gcd(content(a), content(b));
  a = primitive(a);
  b = primitive(b);
  if (xdeg(a) < xdeg(b)) std::swap(a, b);
  BPoly g;
  while (true) {
    if (b.empty()) {
      g = a;
      break;
    }
    if (xdeg(b) == 0) {
      g = BPoly{UPoly({Rat(1)})};
      break;
    }
    BPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.empty() ? r : primitive(r);
  }
  g = primitive(g);
  for (auto& x : g) x = x * c;
  return g;
}

BPoly dx(const BPoly& b) {
  BPoly r;
  for (std::size_t i = 1; i < b.size(); ++i) r.push_back(scaled(b[i], Rat(static_cast<long>(i))));
  trim(r);
  return r;
}

BPoly dy(const BPoly& b) {
  BPoly r;
  for (const auto& c : b) r.push_back(c.derivative());
  trim(r);
  return r;
}

unsigned z_valuation(const Poly& F) {
  unsigned k = ~0u;
  for (const auto& t : F.terms()) k = std::min<unsigned>(k, t.mono[2]);
  return k;
}

Poly z_power(const RingPtr& ring, unsigned k) {
  return Poly::monomial(ring, Monomial::variable(2, static_cast<std::uint16_t>(k)));
}

void check_ternary(const Poly& F) {
  if (F.ring()->size() != 3 || !F.is_homogeneous())
    throw DomainError("expected a homogeneous polynomial in three variables");
}

}  // namespace

UPoly restrict_to_line(const Poly& p, const std::array<Int, 3>& P, const std::array<Int, 3>& Q) {
  static const RingPtr ring = make_ring({"t"});
  const Poly t = Poly::variable(ring, 0);
  std::vector<Poly> images;
  for (std::size_t j = 0; j < 3; ++j) images.push_back(Poly::constant(ring, Rat(P[j])) + t * Rat(Q[j]));
  const Poly r = p.substitute(images);
  std::vector<Rat> c(static_cast<std::size_t>(std::max(r.degree(), 0)) + 1);
  for (const auto& term : r.terms()) c[term.mono[0]] = term.coeff;
  return UPoly(std::move(c));
}

Poly ternary_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("ternary_gcd: both arguments zero");
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  check_ternary(a);
  check_ternary(b);
  const unsigned ka = z_valuation(a), kb = z_valuation(b);
  const Poly a1 = exact_div(a, z_power(a.ring(), ka)), b1 = exact_div(b, z_power(a.ring(), kb));
  const Poly g = homogenize(bgcd(dehomogenize(a1), dehomogenize(b1)), a.ring());
  return primitive_part(g * z_power(a.ring(), std::min(ka, kb)));
}

Poly ternary_squarefree(const Poly& F) {
  if (F.is_zero()) throw DomainError("squarefree part of zero");
  check_ternary(F);
  // If F restricted to some line is squarefree of full degree, so is F: a
  // repeated factor p of F restricts to a repeated factor unless the line lies in V(p).
  const std::array<std::array<Int, 3>, 3> probes{{{3, -7, 11}, {2, 5, -13}, {-17, 19, 4}}};
  for (std::size_t i = 0; i < probes.size(); ++i) {
    const auto& P = probes[i];
    const auto& Q = probes[(i + 1) % probes.size()];
    const UPoly f = restrict_to_line(F, P, Q);
    if (f.degree() == F.degree() && gcd(f, f.derivative()).degree() == 0) return primitive_part(F);
  }
  const unsigned k = z_valuation(F);
  const Poly F1 = exact_div(F, z_power(F.ring(), k));
  const BPoly f = dehomogenize(F1);
  const BPoly g = bgcd(bgcd(f, dx(f)), dy(f));
  Poly s = exact_div(F1, homogenize(g, F.ring()));
  if (k > 0) s = s * z_power(F.ring(), 1);
  return primitive_part(s);
}

}  // namespace icotk::detail
