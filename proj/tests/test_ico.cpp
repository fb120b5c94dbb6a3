#include <random>

#include "doctest.h"
#include "icotk/errors.hpp"
#include "icotk/ico/models.hpp"
#include "icotk/ico/surface.hpp"

using namespace icotk;

namespace {

const FixedGeometry& G() { return FixedGeometry::get(); }
Poly P4(const std::string& s) { return poly_parse(s, G().p4()); }
Poly P2(const std::string& s) { return poly_parse(s, G().p2()); }
ProjPoint pt(std::initializer_list<long> c) {
  std::vector<Int> v;
  for (long x : c) v.push_back(x);
  return ProjPoint(v);
}

// Power-sum oracle for sigma_2, sigma_4 via Newton's identities.
std::pair<Int, Int> sigma24_newton(const std::vector<Int>& x) {
  Int p[5] = {0, 0, 0, 0, 0};
  for (const auto& v : x) {
    Int pw = 1;
    for (int k = 1; k <= 4; ++k) {
      pw *= v;
      p[k] += pw;
    }
  }
  const Int e1 = p[1];
  const Int e2 = (e1 * p[1] - p[2]) / 2;
  const Int e3 = (e2 * p[1] - e1 * p[2] + p[3]) / 3;
  const Int e4 = (e3 * p[1] - e2 * p[2] + e1 * p[3] - p[4]) / 4;
  return {e2, e4};
}

}  // namespace

TEST_CASE("ProjPoint normalization") {
  auto p = pt({-4, 6, 10});
  CHECK(p == pt({2, -3, -5}));
  CHECK(p[0] == 2);
  CHECK(ProjPoint(p.coords()) == p);
  CHECK(pt({0, -3, 6}) == pt({0, 1, -2}));
  CHECK_THROWS_AS(pt({0, 0, 0}), DomainError);
  CHECK(ProjPoint::parse("1, -2,4") == pt({1, -2, 4}));
  std::vector<Rat> q{make_rat(1, 2), make_rat(-1, 3), Rat(0)};
  CHECK(ProjPoint::from_rationals(q) == pt({3, -2, 0}));
}

TEST_CASE("tau and rho maps") {
  const auto& g = G();
  for (const auto& t : g.tau()) {
    CHECK(t.is_homogeneous());
    CHECK(t.degree() == 12);
  }
  for (const auto& r : g.rho()) {
    CHECK(r.is_homogeneous());
    CHECK(r.degree() == 8);
  }
  CHECK(g.tau()[4] == g.t()[0] * g.t()[1] * g.t()[2] * g.t()[3]);
  CHECK(g.t()[0] == P2("(y-z)*(x*y+x*z-z^2)"));
  CHECK(g.rho()[2] == P4("x1*x2*x3*x4*(x1*x2*x3*x4 + x0*x1*x3*x4)"));
  // Sum of the t_j, used for C_tau.
  CHECK(g.t()[0] + g.t()[1] + g.t()[2] + g.t()[3] == -(P2("y") * P2("x^2 + y*z - z^2")));
}

TEST_CASE("lambda") {
  const auto& l = G().lambda();
  CHECK(l.is_homogeneous());
  CHECK(l.degree() == 95);
  CHECK(G().lambda_factorization_holds());
  std::vector<Rat> a{1, 1, 0}, b{1, 2, 3}, c{1, 2, 4};
  CHECK(l.evaluate(std::span<const Rat>(a)) == 0);
  CHECK(l.evaluate(std::span<const Rat>(b)) == 0);
  CHECK(l.evaluate(std::span<const Rat>(c)) != 0);
  CHECK(G().lambda_at(c) == l.evaluate(std::span<const Rat>(c)));
}

TEST_CASE("tau_point and rho_point examples") {
  CHECK(tau_point(pt({1, 1, 0})) == pt({0, 0, 0, 1, 0}));
  const auto q = tau_point(pt({1, 2, 4}));
  CHECK(q == pt({126, -140, 315, 630, -180}));
  auto [e2, e4] = sigma24_newton(q.coords());
  CHECK(e2 == 0);
  CHECK(e4 == 0);
  CHECK(rho_point(q) == pt({1, 2, 4}));
  CHECK_THROWS_WITH_AS(tau_point(pt({1, 0, 0})), doctest::Contains("base point"), DomainError);
  CHECK_THROWS_WITH_AS(rho_point(pt({0, 0, 0, 1, 0})), doctest::Contains("rho-base point"), DomainError);
  CHECK_THROWS_WITH_AS(rho_point(pt({1, 1, 1, 1, 1})), doctest::Contains("not on M"), DomainError);
}

TEST_CASE("round trip on random points") {
  for (const auto& p : sample_plane_points(100, 99)) {
    const auto q = tau_point(p);
    auto [e2, e4] = sigma24_newton(q.coords());
    CHECK(e2 == 0);
    CHECK(e4 == 0);
    CHECK(rho_point(q) == p);
  }
}

TEST_CASE("tau maps C_tau minus T_tau into the degenerate points") {
  // Small-height rational points on the components of V(lambda).
  const auto& g = G();
  const auto tt = ttau_points().rational;
  int hits = 0;
  for (long a = -6; a <= 6; ++a)
    for (long b = -6; b <= 6; ++b)
      for (long c = 0; c <= 6; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        const auto p = pt({a, b, c});
        const auto r = p.rationals();
        if (g.lambda_at(r) != 0) continue;
        if (std::find(tt.begin(), tt.end(), p) != tt.end()) continue;
        const auto q = tau_point(p);
        const auto& e = g.e();
        CHECK(std::find(e.begin(), e.end(), q) != e.end());
        ++hits;
      }
  CHECK(hits > 50);
}

TEST_CASE("identity suite") {
  auto sym = verify_identities(IdentityMode::Symbolic);
  CHECK(sym.checks.size() == 3);
  for (const auto& c : sym.checks) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
  auto smp = verify_identities(IdentityMode::Sampled, 25, 7);
  for (const auto& c : smp.checks) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
  CHECK_THROWS_AS(verify_identities(IdentityMode::Sampled, 0, 1), DomainError);
  // Deterministic sampling.
  CHECK(sample_plane_points(5, 3) == sample_plane_points(5, 3));
}

TEST_CASE("T_tau") {
  const auto tt = ttau_points();
  CHECK(tt.rational.size() == 6);
  for (const auto& p : tt.rational) {
    for (const auto& t : G().tau()) CHECK(t.evaluate(std::span<const Int>(p.coords())) == 0);
    CHECK_THROWS_AS(tau_point(p), DomainError);
  }
  for (const auto& t : G().t()) CHECK(evaluate_golden(t, tt.quadratic).is_zero());
  for (const auto& t : G().tau()) CHECK(evaluate_golden(t, tt.quadratic).is_zero());
  std::vector<Int> excluded{1, 1, 0};
  CHECK(G().tau()[3].evaluate(std::span<const Int>(excluded)) == 1);
  // The Galois conjugate (1, 1, 1 - t) also annihilates tau.
  std::array<Golden, 3> conj{Golden{1, 0}, Golden{1, 0}, Golden{1, -1}};
  for (const auto& t : G().tau()) CHECK(evaluate_golden(t, conj).is_zero());
}

TEST_CASE("diagonal, degeneracy and nu") {
  IcoModel a({P4("x0^3 + x1*x2*x3")});
  CHECK(a.diagonal()[0][0] == 1);
  for (int i = 1; i < 5; ++i) CHECK(a.diagonal()[i][0] == 0);
  CHECK(is_degenerate(a));

  IcoModel b({P4("2*x0^3+3*x1^3+5*x2^3+7*x3^3+11*x4^3")});
  CHECK_FALSE(is_degenerate(b));
  CHECK(nu_f(b) == 2310);
  CHECK(nu_f(IcoModel({P4("x0^4+x1^4+x2^4+x3^4+x4^4")})) == 1);
  CHECK(nu_f(IcoModel({P4("4*x0^2+9*x1^2+x2^2+x3^2+x4^2")})) == 6);
  CHECK(is_degenerate(IcoModel({P4("x0^2"), P4("x1*x2")})));
  CHECK_FALSE(meets_degeneracy_locus(IcoModel({P4("x0+x1+x2+x3+x4")})));
  CHECK(meets_degeneracy_locus(IcoModel({elementary_symmetric(G().p4(), 2, 5)})));
  CHECK_THROWS_AS(IcoModel({P4("x0^2 + x1")}), DomainError);
}

TEST_CASE("diagonal properties on random models") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> c(-4, 4), deg(1, 3), cnt(1, 3);
  for (int k = 0; k < 60; ++k) {
    std::vector<Poly> fs;
    const int m = cnt(rng);
    for (int j = 0; j < m; ++j) {
      std::vector<Poly::Term> ts;
      for (const auto& mono : monomials_of_degree(5, static_cast<unsigned>(deg(rng))))
        if (rng() % 3 == 0) ts.push_back({mono, Rat(c(rng))});
      Poly f = Poly::from_terms(G().p4(), ts);
      if (f.is_zero()) f = P4("x0*x1");
      fs.push_back(f);
    }
    IcoModel model(fs);
    CHECK(model.diagonal() == diagonal_by_evaluation(model));
    CHECK(is_degenerate(model) == meets_degeneracy_locus(model));
    std::vector<Poly> rev(fs.rbegin(), fs.rend());
    for (auto& f : rev) f = -f;
    CHECK(nu_f(IcoModel(rev)) == nu_f(model));
  }
}

TEST_CASE("is_curve") {
  CHECK(is_curve(IcoModel({P4("x0+x1+x2+x3+x4")})));
  CHECK_FALSE(is_curve(IcoModel(std::vector<Poly>{})));
  CHECK_FALSE(is_curve(IcoModel({P4("x0"), P4("x1"), P4("x2"), P4("x3"), P4("x4")})));
}

TEST_CASE("basis_An") {
  CHECK(basis_An(1).size() == 5);
  CHECK(basis_An(2).size() == 14);
  CHECK(basis_An(3).size() == 30);
  for (unsigned n = 1; n <= 6; ++n) {
    const auto b = basis_An(n);
    CHECK(b.size() == hilbert_function(G().surface_ideal(), n));
    CHECK(b.size() == dim_An(n));
    for (std::size_t i = 0; i < 5; ++i) CHECK(b[i] == Monomial::variable(i, static_cast<std::uint16_t>(n)));
  }
}

TEST_CASE("general models") {
  auto m = general_model(1, {1, 1, 1, 1, 1});
  CHECK_FALSE(is_degenerate(m));
  CHECK(nu_f(m) == 1);
  CHECK(nu_f(general_model(1, {2, 3, 5, 7, 11})) == 2310);
  std::vector<Rat> v(14, 1);
  v[2] = 0;
  CHECK(is_degenerate(general_model(2, v)));
  CHECK_THROWS_AS(general_model(2, {1, 2}), DomainError);

  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> c(1, 6);
  for (unsigned n = 1; n <= 2; ++n) {
    std::vector<Rat> w(dim_An(n));
    for (auto& x : w) x = c(rng) * (rng() % 2 ? 1 : -1);
    auto model = general_model(n, w);
    CHECK_FALSE(is_degenerate(model));
    CHECK(is_curve(model));
    auto I = model_ideal(model);
    auto [dim, deg] = dim_degree(I);
    REQUIRE(dim == 1);
    REQUIRE(deg == 8 * n);
    CHECK(arithmetic_genus(I) == genus_general(n));
  }
}

TEST_CASE("genus_general") {
  CHECK(genus_general(1) == 9);
  CHECK(genus_general(2) == 25);
  CHECK(genus_general(4) == 81);
  CHECK(complete_intersection_genus({2, 4, 1}) == 9);
  // Plane-curve sanity: degrees (1, 1, d) in P^4 give a plane curve of genus (d-1)(d-2)/2.
  CHECK(complete_intersection_genus({1, 1, 4}) == 3);
}
