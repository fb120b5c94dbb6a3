#include "icotk/plane/curves.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <unordered_map>

#include "icotk/algebra/linalg.hpp"
#include "icotk/algebra/univariate.hpp"
#include "icotk/errors.hpp"
#include "icotk/ico/surface.hpp"
#include "plane_gcd.hpp"

namespace icotk {

PlaneCurve::PlaneCurve(const Poly& F) : F_(p2_ring()) {
  if (F.is_zero()) throw DomainError("plane curve: zero polynomial");
  const RingPtr& ring = FixedGeometry::get().p2();
  Poly G = same_ring(F.ring(), ring) ? F : F.embed(ring);
  if (!G.is_homogeneous()) throw DomainError("plane curve: polynomial is not homogeneous: " + G.to_string());
  if (G.degree() < 1) throw DomainError("plane curve: polynomial of degree 0");
  F_ = primitive_part(G);
  abs_ = 0;
  for (const auto& t : F_.terms())
    if (abs(t.coeff.get_num()) > abs_) abs_ = abs(t.coeff.get_num());
}

PlaneCurve PlaneCurve::parse(const std::string& text) {
  return PlaneCurve(poly_parse(text, FixedGeometry::get().p2()));
}

Poly pullback_rho(const Poly& F) {
  const auto& g = FixedGeometry::get();
  const Poly G = same_ring(F.ring(), g.p2()) ? F : F.embed(g.p2());
  if (!G.is_homogeneous()) throw DomainError("pullback_rho: input is not homogeneous");
  const auto& rho = g.rho();
  const Poly r = G.substitute({rho[0], rho[1], rho[2]});
  if (r.is_zero()) throw DomainError("pullback_rho: zero pullback");
  return primitive_part(r);
}

Poly pullback_tau(const Poly& f) {
  const auto& g = FixedGeometry::get();
  const Poly h = same_ring(f.ring(), g.p4()) ? f : f.embed(g.p4());
  if (!h.is_homogeneous()) throw DomainError("pullback_tau: input is not homogeneous");
  const auto& tau = g.tau();
  const Poly r = h.substitute(std::vector<Poly>(tau.begin(), tau.end()));
  if (r.is_zero()) throw DomainError("pullback_tau: zero pullback");
  return primitive_part(r);
}

std::string stage_name(TauStage stage) {
  switch (stage) {
    case TauStage::None:
      return "none";
    case TauStage::CurveMeetsCtauOffTtau:
      return "curve-meets-Ctau-off-Ttau";
    case TauStage::ImageContainsE:
      return "image-contains-e_i";
  }
  return "?";
}

namespace detail {

namespace {

RingPtr uw_ring() {
  static const RingPtr r = make_ring({"u", "w"});
  return r;
}

std::array<Rat, 3> coefficients_of_line(const Poly& l) {
  std::array<Rat, 3> c;
  for (std::size_t i = 0; i < 3; ++i) c[i] = l.coefficient(Monomial::variable(i));
  return c;
}

Rat eval3(const Poly& p, const std::array<Rat, 3>& v) { return p.evaluate(std::span<const Rat>(v)); }

std::array<Poly, 3> parametrize_line(const Poly& l) {
  const auto c = coefficients_of_line(l);
  RatMatrix m(1, 3);
  for (std::size_t i = 0; i < 3; ++i) m.at(0, i) = c[i];
  const auto ker = m.kernel();
  const RingPtr R = uw_ring();
  const Poly u = Poly::variable(R, 0), w = Poly::variable(R, 1);
  std::array<Poly, 3> phi{Poly(R), Poly(R), Poly(R)};
  for (std::size_t j = 0; j < 3; ++j) phi[j] = u * ker[0][j] + w * ker[1][j];
  return phi;
}

// Projection from a rational point P of the conic Q: s -> Q(s) P - (grad Q(P) . s) s
// for s on a coordinate line avoiding P.
std::array<Poly, 3> parametrize_conic(const Poly& q) {
  std::array<Rat, 3> P{};
  bool found = false;
  for (int a = -2; a <= 2 && !found; ++a)
    for (int b = -2; b <= 2 && !found; ++b)
      for (int c = -2; c <= 2 && !found; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        P = {Rat(a), Rat(b), Rat(c)};
        found = eval3(q, P) == 0;
      }
  if (!found) throw Error("no small rational point on conic " + q.to_string());
  std::size_t i = 0;
  while (P[i] == 0) ++i;
  const RingPtr R = uw_ring();
  const Poly u = Poly::variable(R, 0), w = Poly::variable(R, 1);
  std::array<Poly, 3> s{Poly(R), Poly(R), Poly(R)};
  s[(i + 1) % 3] = u;
  s[(i + 2) % 3] = w;
  Poly grad_dot_s(R);
  for (std::size_t j = 0; j < 3; ++j) grad_dot_s += s[j] * eval3(q.derivative(j), P);
  const Poly qs = q.substitute({s[0], s[1], s[2]});
  std::array<Poly, 3> phi{Poly(R), Poly(R), Poly(R)};
  for (std::size_t j = 0; j < 3; ++j) phi[j] = qs * P[j] - grad_dot_s * s[j];
  return phi;
}

}  // namespace

std::vector<std::array<Poly, 3>> ctau_parametrizations() {
  static std::once_flag once;
  static std::vector<std::array<Poly, 3>> params;
  std::call_once(once, [] {
    for (const auto& f : FixedGeometry::get().lambda_factors()) {
      const auto phi = f.factor.degree() == 1 ? parametrize_line(f.factor) : parametrize_conic(f.factor);
      if (!f.factor.substitute({phi[0], phi[1], phi[2]}).is_zero())
        throw Error("parametrization does not land on " + f.factor.to_string());
      params.push_back(phi);
    }
  });
  return params;
}

namespace {

// Normal forms of all degree-e monomials in the maps modulo (F), built one
// degree at a time from the previous degree.
class KernelEngine {
 public:
  KernelEngine(const Poly& F, std::vector<Poly> maps, RingPtr target, GbBudget budget)
      : gb_{F}, maps_(std::move(maps)), target_(std::move(target)), budget_(budget) {
    current_.emplace(Monomial{}, Poly::constant(F.ring(), 1));
  }

  unsigned degree() const { return e_; }

  void advance() {
    ++e_;
    const auto monos = monomials_of_degree(maps_.size(), e_);
    std::unordered_map<Monomial, Poly, MonomialHash> next;
    for (const auto& a : monos) {
      std::size_t k = 0;
      while (a[k] == 0) ++k;
      Monomial prev = a;
      prev.set(k, static_cast<std::uint16_t>(a[k] - 1));
      next.emplace(a, reduce(maps_[k] * current_.at(prev), gb_, MonomialOrder::grevlex(), budget_));
    }
    current_ = std::move(next);
    columns_ = monos;
  }

  const std::vector<Monomial>& columns() const { return columns_; }

  /// Kernel basis as coordinate vectors over columns().
  std::vector<RatVector> kernel() const {
    std::unordered_map<Monomial, std::size_t, MonomialHash> rows;
    for (const auto& a : columns_)
      for (const auto& t : current_.at(a).terms()) rows.emplace(t.mono, rows.size());
    RatMatrix m(rows.size(), columns_.size());
    for (std::size_t j = 0; j < columns_.size(); ++j)
      for (const auto& t : current_.at(columns_[j]).terms()) m.at(rows.at(t.mono), j) = t.coeff;
    return m.kernel();
  }

  Poly to_poly(const RatVector& v) const {
    std::vector<Poly::Term> ts;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) ts.push_back({columns_[j], v[j]});
    return Poly::from_terms(target_, std::move(ts));
  }

 private:
  std::vector<Poly> gb_;
  std::vector<Poly> maps_;
  RingPtr target_;
  GbBudget budget_;
  unsigned e_ = 0;
  std::unordered_map<Monomial, Poly, MonomialHash> current_;
  std::vector<Monomial> columns_;
};

}  // namespace

std::vector<Poly> image_kernel(const Poly& F, const std::vector<Poly>& maps, const RingPtr& target, unsigned e,
                               GbBudget budget) {
  if (maps.size() != target->size()) throw DomainError("image_kernel: one map per target variable");
  KernelEngine eng(F, maps, target, budget);
  for (unsigned k = 0; k < e; ++k) eng.advance();
  std::vector<Poly> out;
  for (const auto& v : eng.kernel()) out.push_back(primitive_part(eng.to_poly(v)));
  return out;
}

}  // namespace detail

bool ImageData::all_separated() const {
  for (int d : separating_degree)
    if (d < 0) return false;
  return true;
}

Ideal ImageData::ideal() const { return Ideal(FixedGeometry::get().p4(), generators); }

namespace {

// F_red: the squarefree part of F with the C_tau components divided out.
Poly reduced_off_ctau(const Poly& F) {
  Poly r = detail::ternary_squarefree(F);
  for (const auto& f : FixedGeometry::get().lambda_factors()) {
    try {
      r = exact_div(r, f.factor);
    } catch (const NotDivisible&) {
    }
  }
  return r;
}

}  // namespace

ImageData image_data(const PlaneCurve& F, unsigned min_degree, GbBudget budget, unsigned max_degree) {
  const auto& geo = FixedGeometry::get();
  ImageData out;
  const Poly Fr = reduced_off_ctau(F.poly());
  if (Fr.degree() == 0) {
    out.empty = true;
    out.generators = {Poly::constant(geo.p4(), 1)};
    out.separating_degree = {0, 0, 0, 0, 0};
    return out;
  }
  // A reduced curve of degree D in P^4 is cut out set-theoretically by forms
  // of degree <= D, and deg Y <= 12 deg F_red.
  out.degree_limit = 12 * static_cast<unsigned>(Fr.degree());
  detail::KernelEngine eng(Fr, std::vector<Poly>(geo.tau().begin(), geo.tau().end()), geo.p4(), budget);
  std::vector<RatVector> prev_kernel;
  std::vector<Monomial> prev_cols;
  const unsigned stop = max_degree ? std::min(max_degree, out.degree_limit) : out.degree_limit;
  while (eng.degree() < stop) {
    eng.advance();
    const unsigned e = eng.degree();
    const auto& cols = eng.columns();
    const auto ker = eng.kernel();

    for (std::size_t i = 0; i < 5; ++i) {
      if (out.separating_degree[i] >= 0) continue;
      const Monomial pure = Monomial::variable(i, static_cast<std::uint16_t>(e));
      const std::size_t j = static_cast<std::size_t>(std::find(cols.begin(), cols.end(), pure) - cols.begin());
      for (const auto& v : ker)
        if (v[j] != 0) {
          out.separating_degree[i] = static_cast<int>(e);
          break;
        }
    }

    // New minimal generators: kernel directions not reached by x_k J_{e-1}.
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    for (std::size_t j = 0; j < cols.size(); ++j) index.emplace(cols[j], j);
    RowSpace space(cols.size());
    for (const auto& v : prev_kernel)
      for (std::size_t k = 0; k < 5; ++k) {
        RatVector w(cols.size());
        for (std::size_t j = 0; j < v.size(); ++j)
          if (v[j] != 0) w[index.at(prev_cols[j] * Monomial::variable(k))] = v[j];
        space.insert(std::move(w));
      }
    for (const auto& v : ker)
      if (space.insert(v)) out.generators.push_back(primitive_part(eng.to_poly(v)));
    out.through_degree = e;
    prev_kernel = ker;
    prev_cols = cols;

    if (e >= min_degree && out.all_separated()) break;
  }
  return out;
}

Ideal image_ideal(const PlaneCurve& F, GbBudget budget) { return image_data(F, 4, budget).ideal(); }

TauReport check_tau(const PlaneCurve& F, GbBudget budget) {
  const auto start = std::chrono::steady_clock::now();
  const auto& geo = FixedGeometry::get();
  TauReport rep;
  auto finish = [&] {
    rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
  };

  for (const auto& f : geo.lambda_factors()) {
    try {
      exact_div(F.poly(), f.factor);
    } catch (const NotDivisible&) {
      continue;
    }
    rep.verdict = TauVerdict::Fails;
    rep.stage = TauStage::CurveMeetsCtauOffTtau;
    rep.witness = "component " + f.factor.to_string() + " of C_tau";
    return finish();
  }

  const auto params = detail::ctau_parametrizations();
  const auto& factors = geo.lambda_factors();
  for (std::size_t c = 0; c < params.size(); ++c) {
    const auto& phi = params[c];
    const unsigned dphi = static_cast<unsigned>(factors[c].factor.degree());
    const BinaryForm G = BinaryForm::from_poly(F.poly().substitute({phi[0], phi[1], phi[2]}), F.degree() * dphi);
    for (std::size_t k = 0; k < 5; ++k) {
      const BinaryForm T = BinaryForm::from_poly(geo.tau()[k].substitute({phi[0], phi[1], phi[2]}), 12 * dphi);
      if (roots_contained(G, T)) continue;
      rep.verdict = TauVerdict::Fails;
      rep.stage = TauStage::CurveMeetsCtauOffTtau;
      rep.witness = "meets " + factors[c].factor.to_string() + " = 0 where tau_" + std::to_string(k) + " != 0";
      return finish();
    }
  }

  const ImageData img = image_data(F, 4, budget);
  rep.image_generators = img.generators;
  rep.separating_degree = img.separating_degree;
  for (std::size_t i = 0; i < 5; ++i) {
    if (img.separating_degree[i] >= 0) continue;
    rep.verdict = TauVerdict::Fails;
    rep.stage = TauStage::ImageContainsE;
    rep.witness_e = static_cast<int>(i);
    rep.witness = "e_" + std::to_string(i + 1) + " lies on the image closure";
    return finish();
  }
  return finish();
}

bool tau_witness(const IcoModel& f) {
  if (f.size() != 1) return false;
  for (const auto& row : f.diagonal())
    if (row[0] == 0) return false;
  return true;
}

ContainingModel containing_model(const PlaneCurve& F, GbBudget budget) {
  const auto& geo = FixedGeometry::get();
  const TauReport rep = check_tau(F, budget);
  if (rep.verdict != TauVerdict::Satisfies)
    throw DomainError("containing_model: the curve fails (tau) at stage " + stage_name(rep.stage));
  const Ideal J(geo.p4(), rep.image_generators);

  ContainingModel out;
  std::array<unsigned, 5> d{};
  for (std::size_t i = 0; i < 5; ++i) {
    const auto& e = geo.e()[i].coords();
    const Poly* best = nullptr;
    for (const auto& g : rep.image_generators)
      if (g.evaluate(std::span<const Int>(e)) != 0 && (!best || g.degree() < best->degree())) best = &g;
    if (!best) throw Error("containing_model: no generator separates e_" + std::to_string(i + 1));
    out.g[i] = *best;
    d[i] = static_cast<unsigned>(best->degree());
    out.r = std::max(out.r, d[i]);
  }
  Poly sum(geo.p4());
  for (std::size_t i = 0; i < 5; ++i) {
    const Poly t = Poly::monomial(geo.p4(), Monomial::variable(i, static_cast<std::uint16_t>(out.r - d[i]))) * out.g[i];
    sum += t * t;
  }
  out.f_tilde = primitive_part(sum);
  out.in_ideal = normal_form(out.f_tilde, J, MonomialOrder::grevlex(), budget).is_zero();
  out.positive_at_e = true;
  for (const auto& e : geo.e()) out.positive_at_e = out.positive_at_e && out.f_tilde.evaluate(std::span<const Int>(e.coords())) > 0;
  out.degree_bound = 128 * F.degree();
  Int m = 0;
  for (const auto& t : out.f_tilde.terms())
    if (abs(t.coeff.get_num()) > m) m = abs(t.coeff.get_num());
  out.log10_height = LogBound::log10_of(m);
  out.log10_height_bound = containing_model_height_bound(Int(F.degree()), F.height());
  return out;
}

PlaneCurve family_curve(unsigned n, const std::vector<Rat>& v) {
  const auto s = basis_An(n);
  if (v.size() != s.size())
    throw DomainError("family_curve: expected " + std::to_string(s.size()) + " coefficients, got " +
                      std::to_string(v.size()));
  std::vector<Poly::Term> ts;
  for (std::size_t i = 0; i < s.size(); ++i) ts.push_back({s[i], v[i]});
  const Poly f = Poly::from_terms(FixedGeometry::get().p4(), std::move(ts));
  if (f.is_zero()) throw DomainError("family_curve: all coefficients are zero");
  return PlaneCurve(pullback_tau(f));
}

}  // namespace icotk
