#include "icotk/algebra/univariate.hpp"

#include "icotk/errors.hpp"

namespace icotk {

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rat> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return UPoly(std::move(r));
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  std::vector<Rat> r = c_;
  const Rat inv = 1 / c_.back();
  for (auto& x : r) x *= inv;
  return UPoly(std::move(r));
}

Rat UPoly::evaluate(const Rat& t) const {
  Rat acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
  return acc;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DomainError("UPoly::divmod: division by zero");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Rat> rem = a.c_;
  std::vector<Rat> quo(a.c_.size() - b.c_.size() + 1);
  const Rat inv = 1 / b.lead();
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Rat f = rem[k + b.c_.size() - 1] * inv;
    quo[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= f * b.c_[j];
  }
  rem.resize(b.c_.size() - 1);
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    auto r = UPoly::divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.is_zero()) throw DomainError("squarefree_part: zero polynomial");
  if (p.degree() == 0) return UPoly({Rat(1)});
  const UPoly g = gcd(p, p.derivative());
  return UPoly::divmod(p, g).first.monic();
}

bool BinaryForm::is_zero() const {
  for (const auto& c : coeffs)
    if (c != 0) return false;
  return true;
}

BinaryForm BinaryForm::from_poly(const Poly& p, unsigned degree) {
  if (p.ring()->size() != 2) throw DomainError("BinaryForm: expected a two-variable ring");
  BinaryForm f{degree, std::vector<Rat>(degree + 1)};
  for (const auto& t : p.terms()) {
    if (t.mono.deg != degree) throw DomainError("BinaryForm: polynomial is not homogeneous of the stated degree");
    f.coeffs[t.mono[0]] = t.coeff;
  }
  return f;
}

bool roots_contained(const BinaryForm& g, const BinaryForm& h) {
  if (g.is_zero()) throw DomainError("roots_contained: zero form");
  if (h.is_zero()) return true;
  if (g.vanishes_at_infinity() && !h.vanishes_at_infinity()) return false;
  const UPoly ga = g.affine();
  if (ga.degree() <= 0) return true;
  return squarefree_part(ga).divides(h.affine());
}

}  // namespace icotk
