#include "icotk/ico/models.hpp"

#include "icotk/algebra/linalg.hpp"
#include "icotk/errors.hpp"
#include "icotk/ico/surface.hpp"

namespace icotk {

IcoModel::IcoModel(std::vector<Poly> fs) {
  const auto& ring = FixedGeometry::get().p4();
  for (auto& f : fs) {
    if (f.is_zero()) throw DomainError("ico model: zero polynomial");
    Poly g = same_ring(f.ring(), ring) ? f : f.embed(ring);
    if (!g.is_homogeneous()) throw DomainError("ico model: polynomial is not homogeneous: " + g.to_string());
    if (g.degree() < 1) throw DomainError("ico model: polynomial of degree 0");
    f_.push_back(primitive_part(g));
  }
  diag_.assign(5, std::vector<Int>(f_.size()));
  for (std::size_t j = 0; j < f_.size(); ++j) {
    const auto n = static_cast<std::uint16_t>(f_[j].degree());
    for (std::size_t i = 0; i < 5; ++i) {
      const Rat c = f_[j].coefficient(Monomial::variable(i, n));
      diag_[i][j] = c.get_num();
    }
  }
}

std::vector<std::vector<Int>> diagonal_by_evaluation(const IcoModel& model) {
  const auto& e = FixedGeometry::get().e();
  std::vector<std::vector<Int>> d(5, std::vector<Int>(model.size()));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < model.size(); ++j)
      d[i][j] = model.polys()[j].evaluate(std::span<const Int>(e[i].coords())).get_num();
  return d;
}

bool is_degenerate(const IcoModel& model) {
  for (const auto& row : model.diagonal()) {
    bool zero = true;
    for (const auto& a : row) zero = zero && a == 0;
    if (zero) return true;
  }
  return false;
}

bool meets_degeneracy_locus(const IcoModel& model) {
  for (const auto& e : FixedGeometry::get().e()) {
    bool common_zero = true;
    for (const auto& f : model.polys()) common_zero = common_zero && f.evaluate(std::span<const Int>(e.coords())) == 0;
    if (common_zero) return true;
  }
  return false;
}

Int nu_f(const IcoModel& model, const FactorBudget& budget) {
  Int prod = 1;
  for (const auto& row : model.diagonal())
    for (const auto& a : row)
      if (a != 0) prod *= a;
  return int_radical(prod, budget);
}

Ideal model_ideal(const IcoModel& model) {
  const auto& g = FixedGeometry::get();
  std::vector<Poly> gens{g.sigma2(), g.sigma4()};
  for (const auto& f : model.polys()) gens.push_back(f);
  return Ideal(g.p4(), std::move(gens));
}

bool is_curve(const IcoModel& model, GbBudget budget) { return dim_degree(model_ideal(model), budget).first == 1; }

unsigned dim_An(unsigned n) {
  if (n == 0) return 1;
  return n == 1 ? 5 : 4 * n * n - 4 * n + 6;
}

std::vector<Monomial> basis_An(unsigned n, GbBudget budget) {
  if (n == 0) throw DomainError("basis_An: n must be at least 1");
  const auto& g = FixedGeometry::get();
  const auto& gb = g.surface_ideal().basis(MonomialOrder::grevlex(), budget);
  const auto monos = monomials_of_degree(5, n);
  std::vector<Monomial> standard;
  for (const auto& m : monos) {
    bool s = true;
    for (const auto& b : gb) s = s && !b.leading_term().mono.divides(m);
    if (s) standard.push_back(m);
  }
  const std::size_t r = standard.size();
  if (r != dim_An(n)) throw Error("basis_An: standard monomial count " + std::to_string(r) + " differs from " +
                                  std::to_string(dim_An(n)));
  auto coords = [&](const Monomial& m) {
    const Poly nf = reduce(Poly::monomial(g.p4(), m), gb, MonomialOrder::grevlex(), budget);
    RatVector v(r);
    for (std::size_t k = 0; k < r; ++k) v[k] = nf.coefficient(standard[k]);
    return v;
  };
  RowSpace space(r);
  std::vector<Monomial> basis;
  for (std::size_t i = 0; i < 5; ++i) {
    const Monomial p = Monomial::variable(i, static_cast<std::uint16_t>(n));
    if (!space.insert(coords(p))) throw Error("pure powers dependent in degree " + std::to_string(n));
    basis.push_back(p);
  }
  for (const auto& m : monos) {
    if (space.rank() == r) break;
    bool pure = false;
    for (std::size_t i = 0; i < 5; ++i) pure = pure || m[i] == n;
    if (pure) continue;
    if (space.insert(coords(m))) basis.push_back(m);
  }
  if (space.rank() != r) throw Error("basis_An: monomials do not span A_n");
  return basis;
}

IcoModel general_model(unsigned n, const std::vector<Rat>& v) {
  const auto s = basis_An(n);
  if (v.size() != s.size())
    throw DomainError("general_model: expected " + std::to_string(s.size()) + " coefficients, got " +
                      std::to_string(v.size()));
  std::vector<Poly::Term> ts;
  for (std::size_t i = 0; i < s.size(); ++i) ts.push_back({s[i], v[i]});
  Poly f = Poly::from_terms(FixedGeometry::get().p4(), std::move(ts));
  if (f.is_zero()) throw DomainError("general_model: all coefficients are zero");
  return IcoModel({f});
}

Int complete_intersection_genus(const std::vector<long>& degrees) {
  if (degrees.size() != 3) throw DomainError("complete_intersection_genus: expected three degrees");
  auto phi = [](long z) -> Int { return Int((z + 1) * (z + 2)) * ((z + 3) * (z + 4)) / 24; };
  Int g = 0;
  for (unsigned mask = 1; mask < 8; ++mask) {
    long s = 0;
    int m = 0;
    for (int i = 0; i < 3; ++i)
      if (mask & (1u << i)) {
        s += degrees[static_cast<std::size_t>(i)];
        ++m;
      }
    g += (m % 2 == 1 ? 1 : -1) * phi(-s);
  }
  return g;
}

Int genus_general(unsigned n) {
  if (n == 0) throw DomainError("genus_general: n must be at least 1");
  const Int closed = Int(2 * n + 1) * (2 * n + 1);
  const Int phi_sum = complete_intersection_genus({2, 4, static_cast<long>(n)});
  if (closed != phi_sum)
    throw Error("genus formulas disagree: " + closed.get_str() + " vs " + phi_sum.get_str());
  return closed;
}

}  // namespace icotk
