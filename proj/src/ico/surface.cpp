#include "icotk/ico/surface.hpp"

#include <random>

#include "icotk/errors.hpp"

namespace icotk {
namespace {

Poly prod(std::initializer_list<Poly> ps) {
  auto it = ps.begin();
  Poly acc = *it;
  for (++it; it != ps.end(); ++it) acc = acc * *it;
  return acc;
}

template <class T>
std::vector<Rat> eval_all(const T& polys, std::span<const Rat> pt) {
  std::vector<Rat> v;
  for (const auto& p : polys) v.push_back(p.evaluate(pt));
  return v;
}

}  // namespace

const FixedGeometry& FixedGeometry::get() {
  static const FixedGeometry g;
  return g;
}

FixedGeometry::FixedGeometry()
    : p2_(p2_ring()),
      p4_(p4_ring()),
      sigma2_(elementary_symmetric(p4_, 2, 5)),
      sigma4_(elementary_symmetric(p4_, 4, 5)),
      t_{Poly(p2_), Poly(p2_), Poly(p2_), Poly(p2_)},
      tau_{Poly(p2_), Poly(p2_), Poly(p2_), Poly(p2_), Poly(p2_)},
      r_{Poly(p4_), Poly(p4_), Poly(p4_), Poly(p4_), Poly(p4_)},
      rho_{Poly(p4_), Poly(p4_), Poly(p4_)},
      surface_(p4_, {sigma2_, sigma4_}),
      lambda_(p2_) {
  const Poly x = Poly::variable(p2_, 0), y = Poly::variable(p2_, 1), z = Poly::variable(p2_, 2);
  t_[0] = (y - z) * (x * y + x * z - z * z);
  t_[1] = x * z * z + y * z * z - x * x * y - z * z * z;
  t_[2] = x * (z * z - y * y - x * z);
  t_[3] = z * (y * z - x * z + x * x - y * y);
  const Poly sum = t_[0] + t_[1] + t_[2] + t_[3];
  for (std::size_t i = 0; i < 4; ++i) {
    Poly others = Poly::constant(p2_, 1);
    for (std::size_t j = 0; j < 4; ++j)
      if (j != i) others = others * t_[j];
    tau_[i] = -(others * sum);
  }
  tau_[4] = prod({t_[0], t_[1], t_[2], t_[3]});

  for (std::size_t i = 0; i < 5; ++i) {
    Poly r = Poly::constant(p4_, 1);
    for (std::size_t j = 0; j < 5; ++j)
      if (j != i) r = r * Poly::variable(p4_, j);
    r_[i] = r;
  }
  rho_[0] = -((r_[1] + r_[3]) * (r_[0] + r_[1] + r_[2]));
  rho_[1] = r_[0] * (r_[0] + r_[1] + r_[2] + r_[3]);
  rho_[2] = r_[0] * (r_[0] + r_[2]);

  auto P = [&](const char* s) { return poly_parse(s, p2_); };
  factors_ = {
      {P("y - z"), 7},           {P("x"), 6},
      {P("y"), 6},               {P("z"), 6},
      {P("x - y"), 6},           {P("x - z"), 6},
      {P("x + y - z"), 6},       {P("x*y + y*z - z^2"), 6},
      {P("x*z + y^2 - z^2"), 6}, {P("x*y + x*z - z^2"), 7},
      {P("x^2 + y*z - z^2"), 7},
  };

  for (std::size_t i = 0; i < 5; ++i) {
    std::vector<Int> c(5, 0);
    c[i] = 1;
    e_[i] = ProjPoint(c);
  }
}

const Poly& FixedGeometry::lambda() const {
  std::call_once(lambda_once_, [this] {
    std::vector<Poly> images(tau_.begin(), tau_.end());
    lambda_ = exact_div(rho_[0].substitute(images), Poly::variable(p2_, 0));
  });
  return lambda_;
}

bool FixedGeometry::lambda_factorization_holds() const {
  Poly acc = Poly::constant(p2_, lambda_sign());
  for (const auto& f : factors_) acc = acc * f.factor.pow(f.exponent);
  return acc == lambda();
}

Rat FixedGeometry::lambda_at(std::span<const Rat> p) const {
  Rat v = lambda_sign();
  for (const auto& f : factors_) {
    const Rat b = f.factor.evaluate(p);
    if (b == 0) return 0;
    Rat pw;
    mpz_pow_ui(pw.get_num_mpz_t(), b.get_num_mpz_t(), f.exponent);
    mpz_pow_ui(pw.get_den_mpz_t(), b.get_den_mpz_t(), f.exponent);
    v *= pw;
  }
  return v;
}

std::array<Poly, 5> tau_map() { return FixedGeometry::get().tau(); }
std::array<Poly, 3> rho_map() { return FixedGeometry::get().rho(); }

ProjPoint tau_point(const ProjPoint& p) {
  if (p.size() != 3) throw DomainError("tau_point expects a point of P^2");
  const auto pt = p.rationals();
  const auto v = eval_all(FixedGeometry::get().tau(), pt);
  bool all_zero = true;
  for (const auto& c : v) all_zero = all_zero && c == 0;
  if (all_zero) throw DomainError("base point: every tau_i vanishes at " + p.to_string());
  return ProjPoint::from_rationals(v);
}

bool on_surface(const ProjPoint& q) {
  if (q.size() != 5) return false;
  const auto& g = FixedGeometry::get();
  return g.sigma2().evaluate(std::span<const Int>(q.coords())) == 0 &&
         g.sigma4().evaluate(std::span<const Int>(q.coords())) == 0;
}

ProjPoint rho_point(const ProjPoint& q) {
  if (q.size() != 5) throw DomainError("rho_point expects a point of P^4");
  if (!on_surface(q)) throw DomainError("not on M: sigma_2 or sigma_4 is nonzero at " + q.to_string());
  const auto pt = q.rationals();
  const auto v = eval_all(FixedGeometry::get().rho(), pt);
  bool all_zero = true;
  for (const auto& c : v) all_zero = all_zero && c == 0;
  if (all_zero) throw DomainError("rho-base point: every rho_i vanishes at " + q.to_string());
  return ProjPoint::from_rationals(v);
}

bool IdentityReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

std::vector<ProjPoint> sample_plane_points(unsigned count, std::uint64_t seed, long bound) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-bound, bound);
  const auto& g = FixedGeometry::get();
  std::vector<ProjPoint> out;
  while (out.size() < count) {
    std::vector<Int> c{d(rng), d(rng), d(rng)};
    if (c[0] == 0 && c[1] == 0 && c[2] == 0) continue;
    ProjPoint p(c);
    const auto r = p.rationals();
    if (g.lambda_at(r) == 0) continue;
    out.push_back(p);
  }
  return out;
}

namespace {

IdentityCheck check_a_symbolic() {
  const auto& g = FixedGeometry::get();
  std::vector<Poly> images(g.tau().begin(), g.tau().end());
  const bool s2 = g.sigma2().substitute(images).is_zero();
  const bool s4 = g.sigma4().substitute(images).is_zero();
  return {"sigma(tau) = 0", s2 && s4,
          std::string("sigma_2(tau) ") + (s2 ? "is" : "is not") + " zero; sigma_4(tau) " + (s4 ? "is" : "is not") +
              " zero"};
}

IdentityCheck check_b_symbolic() {
  const auto& g = FixedGeometry::get();
  std::vector<Poly> images(g.tau().begin(), g.tau().end());
  const Poly& lambda = g.lambda();
  bool ok = lambda.is_homogeneous() && lambda.degree() == 95;
  for (std::size_t k = 0; k < 3 && ok; ++k)
    ok = g.rho()[k].substitute(images) == lambda * Poly::variable(g.p2(), k);
  const bool factors = ok && g.lambda_factorization_holds();
  return {"rho(tau) = lambda * (x, y, z)", ok && factors,
          "lambda has degree " + std::to_string(lambda.degree()) + " and " + std::to_string(lambda.size()) +
              " terms; factor list " + (factors ? "matches" : "does not match")};
}

// Symbolic (c). With S = sum t_j and D = t_j x_j - t_i x_i (i, j <= 3) or
// S x_4 + t_i x_i (j = 4), the identity
//   tau_i x_j - tau_j x_i = -S * prod_{k != i, j} t_k * D        (i, j <= 3)
//   tau_i x_4 - tau_4 x_i = -prod_{k != i} t_k * (S x_4 + t_i x_i)
// holds in the free ring over symbols t_k; it is checked below, and then
// only the degree-25 cofactors D(rho) need normal forms modulo (sigma_2, sigma_4).
IdentityCheck check_c_symbolic(GbBudget budget) {
  const auto& g = FixedGeometry::get();
  auto sym = make_ring({"T0", "T1", "T2", "T3", "a", "b"});
  std::array<Poly, 4> T{Poly::variable(sym, 0), Poly::variable(sym, 1), Poly::variable(sym, 2), Poly::variable(sym, 3)};
  const Poly a = Poly::variable(sym, 4), b = Poly::variable(sym, 5);
  const Poly S = T[0] + T[1] + T[2] + T[3];
  auto tau_sym = [&](std::size_t i) {
    Poly p = Poly::constant(sym, 1);
    for (std::size_t k = 0; k < 4; ++k)
      if (k != i) p = p * T[k];
    return i == 4 ? p : -(p * S);
  };
  bool factor_ok = true;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) {
      Poly cof = Poly::constant(sym, 1);
      for (std::size_t k = 0; k < 4; ++k)
        if (k != i && k != j) cof = cof * T[k];
      Poly rhs = j < 4 ? -(S * cof * (T[j] * b - T[i] * a)) : -(cof * (S * b + T[i] * a));
      // Here a stands for x_i and b for x_j.
      factor_ok = factor_ok && (tau_sym(i) * b - tau_sym(j) * a == rhs);
    }

  std::vector<Poly> rho_images(g.rho().begin(), g.rho().end());
  std::array<Poly, 4> t_rho{Poly(g.p4()), Poly(g.p4()), Poly(g.p4()), Poly(g.p4())};
  for (std::size_t k = 0; k < 4; ++k) t_rho[k] = normal_form(g.t()[k].substitute(rho_images), g.surface_ideal(),
                                                             MonomialOrder::grevlex(), budget);
  const Poly S_rho = t_rho[0] + t_rho[1] + t_rho[2] + t_rho[3];
  unsigned zero = 0, total = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) {
      const Poly xi = Poly::variable(g.p4(), i), xj = Poly::variable(g.p4(), j);
      const Poly D = j < 4 ? t_rho[j] * xj - t_rho[i] * xi : S_rho * xj + t_rho[i] * xi;
      ++total;
      if (normal_form(D, g.surface_ideal(), MonomialOrder::grevlex(), budget).is_zero()) ++zero;
    }
  const bool ok = factor_ok && zero == total;
  return {"tau_i(rho) x_j - tau_j(rho) x_i in (sigma_2, sigma_4)", ok,
          std::string("cofactor identity ") + (factor_ok ? "holds" : "fails") + "; " + std::to_string(zero) + "/" +
              std::to_string(total) + " reduced differences have normal form 0"};
}

}  // namespace

IdentityReport verify_identities(IdentityMode mode, unsigned samples, std::uint64_t seed, GbBudget budget) {
  IdentityReport rep{mode, samples, seed, {}};
  const auto& g = FixedGeometry::get();
  if (mode == IdentityMode::Symbolic) {
    rep.checks.push_back(check_a_symbolic());
    rep.checks.push_back(check_b_symbolic());
    rep.checks.push_back(check_c_symbolic(budget));
    return rep;
  }
  if (samples == 0) throw DomainError("sampled identity check needs at least one sample");
  unsigned ok_a = 0, ok_b = 0, ok_c = 0;
  for (const auto& p : sample_plane_points(samples, seed)) {
    const ProjPoint q = tau_point(p);
    const auto qc = q.rationals();
    if (g.sigma2().evaluate(std::span<const Rat>(qc)) == 0 && g.sigma4().evaluate(std::span<const Rat>(qc)) == 0)
      ++ok_a;
    if (rho_point(q) == p) ++ok_b;
    const auto rq = eval_all(g.rho(), std::span<const Rat>(qc));
    const auto tr = eval_all(g.tau(), std::span<const Rat>(rq));
    bool c = true;
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i + 1; j < 5; ++j) c = c && tr[i] * qc[j] == tr[j] * qc[i];
    if (c) ++ok_c;
  }
  auto frac = [&](unsigned k) { return std::to_string(k) + "/" + std::to_string(samples) + " samples"; };
  rep.checks.push_back({"sigma(tau) = 0", ok_a == samples, frac(ok_a)});
  rep.checks.push_back({"rho(tau(p)) = p", ok_b == samples, frac(ok_b)});
  rep.checks.push_back({"tau_i(rho(q)) q_j = tau_j(rho(q)) q_i", ok_c == samples, frac(ok_c)});
  return rep;
}

Golden evaluate_golden(const Poly& p, std::span<const Golden> point) {
  if (point.size() != p.ring()->size()) throw DomainError("evaluate_golden: arity mismatch");
  Golden acc;
  for (const auto& t : p.terms()) {
    Golden m{t.coeff, 0};
    for (std::size_t i = 0; i < point.size(); ++i)
      for (unsigned e = 0; e < t.mono[i]; ++e) m = m * point[i];
    acc = acc + m;
  }
  return acc;
}

TTau ttau_points() {
  TTau out;
  for (const auto& c : std::vector<std::vector<long>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}})
    out.rational.push_back(ProjPoint({Int(c[0]), Int(c[1]), Int(c[2])}));
  out.quadratic = {Golden{1, 0}, Golden{1, 0}, Golden{0, 1}};
  return out;
}

}  // namespace icotk
