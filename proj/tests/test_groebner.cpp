#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "icotk/errors.hpp"
#include "icotk/groebner/groebner.hpp"

using namespace icotk;

namespace {

Poly P(const std::string& s, const RingPtr& r) { return poly_parse(s, r); }

Ideal sigma_ideal() {
  auto r = p4_ring();
  return Ideal(r, {elementary_symmetric(r, 2, 5), elementary_symmetric(r, 4, 5)});
}

Int binom_or_zero(long top, long k) {
  if (top < k) return 0;
  Int r = 1;
  for (long i = 1; i <= k; ++i) r = r * (top - k + i) / i;
  return r;
}

// Random homogeneous form of degree n in x0..x4 with every pure power present.
Poly random_nondegenerate(const RingPtr& r, unsigned n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-5, 5);
  std::vector<Poly::Term> ts;
  for (const auto& m : monomials_of_degree(5, n)) {
    int v = c(rng);
    bool pure = false;
    for (std::size_t i = 0; i < 5; ++i)
      if (m[i] == n) pure = true;
    if (pure && v == 0) v = 1;
    ts.push_back({m, Rat(v)});
  }
  return Poly::from_terms(r, std::move(ts));
}

}  // namespace

TEST_CASE("groebner_basis small examples") {
  auto r = p2_ring();
  auto gb = groebner_basis({P("x^2", r), P("x*y", r)}, MonomialOrder::grevlex());
  CHECK(gb.size() == 2);
  CHECK(satisfies_buchberger_criterion(gb, MonomialOrder::grevlex()));

  auto lexgb = groebner_basis({P("x-y", r), P("y-z", r)}, MonomialOrder::lex());
  REQUIRE(lexgb.size() == 2);
  CHECK(lexgb[0] == P("y - z", r));
  CHECK(lexgb[1] == P("x - z", r));

  // Unit ideal.
  auto unit = groebner_basis({P("x*y - 1", r), P("x", r)}, MonomialOrder::grevlex());
  REQUIRE(unit.size() == 1);
  CHECK(unit[0] == P("1", r));
}

TEST_CASE("Buchberger criterion holds on random ideals under every order") {
  auto r = p2_ring();
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> c(-3, 3);
  std::vector<MonomialOrder> orders{MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::block({0})};
  for (int k = 0; k < 12; ++k) {
    std::vector<Poly> gens;
    for (int g = 0; g < 3; ++g) {
      std::vector<Poly::Term> ts;
      for (const auto& m : monomials_of_degree(3, 2)) ts.push_back({m, Rat(c(rng))});
      gens.push_back(Poly::from_terms(r, ts) + Poly::constant(r, c(rng)));
    }
    for (const auto& ord : orders) {
      auto gb = groebner_basis(gens, ord);
      CHECK(satisfies_buchberger_criterion(gb, ord));
      for (const auto& g : gens) CHECK(reduce(g, gb, ord).is_zero());
      // Deterministic output.
      CHECK(groebner_basis(gens, ord) == gb);
    }
  }
}

TEST_CASE("homogeneous inputs give homogeneous bases") {
  auto I = sigma_ideal();
  for (const auto& g : I.basis()) CHECK(g.is_homogeneous());
  CHECK(satisfies_buchberger_criterion(I.basis(), MonomialOrder::grevlex()));
}

TEST_CASE("normal_form") {
  auto I = sigma_ideal();
  auto r = I.ring();
  CHECK(normal_form(elementary_symmetric(r, 2, 5), I).is_zero());
  CHECK(normal_form(Poly::constant(r, 1), I) == Poly::constant(r, 1));
  std::mt19937_64 rng(3);
  for (int k = 0; k < 10; ++k) {
    auto p = random_nondegenerate(r, 3, rng) * make_rat(1, 3);
    auto nf = normal_form(p, I);
    CHECK(normal_form(nf, I) == nf);
    // p - NF(p) lies in I.
    CHECK(normal_form(p - nf, I).is_zero());
    auto s = elementary_symmetric(r, 4, 5) * P("x0 - 2*x3", r);
    CHECK(normal_form(p + s, I) == nf);
  }
}

TEST_CASE("eliminate") {
  auto r = make_ring({"t", "x", "y"});
  Ideal I(r, {P("x - t", r), P("y - t^2", r)});
  auto J = eliminate(I, {0});
  REQUIRE(J.generators().size() == 1);
  CHECK(J.ring()->names() == std::vector<std::string>{"x", "y"});
  const bool parabola = J.generators()[0] == P("x^2 - y", J.ring()) || J.generators()[0] == P("y - x^2", J.ring());
  CHECK(parabola);
  auto same = eliminate(I, {});
  CHECK(same.generators().size() == 2);
  // Generators only involve the allowed variables.
  auto r3 = make_ring({"a", "b", "x", "y", "z"});
  Ideal K(r3, {P("x - a*b", r3), P("y - a^2", r3), P("z - b^2", r3)});
  auto E = eliminate(K, {0, 1});
  for (const auto& g : E.generators()) CHECK(g.ring()->size() == 3);
  auto rr = E.ring();
  CHECK(normal_form(P("x^2 - y*z", rr), Ideal(rr, E.generators())).is_zero());
}

TEST_CASE("saturate") {
  auto r = p2_ring();
  Ideal I(r, {P("x*y", r)});
  auto S = saturate(I, P("x", r));
  REQUIRE(S.generators().size() == 1);
  CHECK(S.generators()[0] == P("y", r));
  Ideal I2(r, {P("x^2", r), P("x*y", r)});
  auto S2 = saturate(I2, Poly::constant(r, 1));
  CHECK(normal_form(P("x^2", r), S2).is_zero());
  CHECK_FALSE(normal_form(P("x", r), S2).is_zero());
  // (x^2, x*y) : x^infinity is the unit ideal; both x and y are members.
  auto S3 = saturate(I2, P("x", r));
  CHECK(normal_form(P("x", r), S3).is_zero());
  CHECK(normal_form(P("y", r), S3).is_zero());
}

TEST_CASE("radical_member") {
  auto r = p2_ring();
  CHECK(radical_member(P("x", r), Ideal(r, {P("x^2", r)})));
  CHECK_FALSE(radical_member(P("y", r), Ideal(r, {P("x^2", r)})));
  // Membership implies radical membership.
  Ideal I(r, {P("x^2 - y*z", r), P("x*y", r)});
  auto m = P("x^2*y - y^2*z", r);
  REQUIRE(normal_form(m, I).is_zero());
  CHECK(radical_member(m, I));
  CHECK(radical_member(P("y^2*z", r), I));
}

TEST_CASE("Hilbert function of the surface ideal") {
  auto I = sigma_ideal();
  CHECK(hilbert_function(I, 1) == 5);
  CHECK(hilbert_function(I, 2) == 14);
  CHECK(hilbert_function(I, 4) == 54);
  for (long d = 0; d <= 12; ++d) {
    const Int closed = binom_or_zero(d + 4, 4) - binom_or_zero(d + 2, 4) - binom_or_zero(d, 4) + binom_or_zero(d - 2, 4);
    CHECK(hilbert_function(I, d) == closed);
    CHECK(count_standard_monomials(I, static_cast<unsigned>(d)) == closed);
  }
  auto [dim, deg] = dim_degree(I);
  CHECK(dim == 2);
  CHECK(deg == 8);
}

TEST_CASE("dim_degree and genus") {
  auto r = p4_ring();
  auto [d1, g1] = dim_degree(Ideal(r, {P("x0", r)}));
  CHECK(d1 == 3);
  CHECK(g1 == 1);
  auto s2 = elementary_symmetric(r, 2, 5), s4 = elementary_symmetric(r, 4, 5);
  Ideal hyper(r, {s2, s4, P("x0+x1+x2+x3+x4", r)});
  auto [dh, degh] = dim_degree(hyper);
  CHECK(dh == 1);
  CHECK(degh == 8);
  CHECK(arithmetic_genus(hyper) == 9);

  auto r2 = p2_ring();
  CHECK(arithmetic_genus(Ideal(r2, {P("x^2+y^2-z^2", r2)})) == 0);
  CHECK(arithmetic_genus(Ideal(r2, {P("x^3+y^3-z^3", r2)})) == 1);
  CHECK_THROWS_AS(arithmetic_genus(Ideal(r, {s2, s4})), DomainError);

  std::mt19937_64 rng(5);
  for (unsigned n = 1; n <= 2; ++n) {
    Ideal I(r, {s2, s4, random_nondegenerate(r, n, rng)});
    auto [dim, deg] = dim_degree(I);
    REQUIRE(dim == 1);
    REQUIRE(deg == 8 * n);
    CHECK(arithmetic_genus(I) == (2 * n + 1) * (2 * n + 1));
  }
  // Empty scheme: all coordinates.
  Ideal empty(r, {P("x0", r), P("x1", r), P("x2", r), P("x3", r), P("x4", r)});
  CHECK(dim_degree(empty).first == -1);
}

TEST_CASE("Hilbert polynomial agrees with the function past the regularity index") {
  auto r = p4_ring();
  std::mt19937_64 rng(9);
  Ideal I(r, {elementary_symmetric(r, 2, 5), elementary_symmetric(r, 4, 5), random_nondegenerate(r, 2, rng)});
  auto h = hilbert_data(I);
  for (long d = h.regularity_index; d < h.regularity_index + 6; ++d)
    CHECK(Rat(h.hilbert_function(d)) == h.hilbert_polynomial_at(Rat(d)));
}

TEST_CASE("budget exhaustion is an error") {
  auto r = p4_ring();
  std::mt19937_64 rng(1);
  CHECK_THROWS_AS(groebner_basis({elementary_symmetric(r, 2, 5), elementary_symmetric(r, 4, 5),
                                  random_nondegenerate(r, 2, rng)},
                                 MonomialOrder::grevlex(), GbBudget{5}),
                  BudgetExceeded);
}

TEST_CASE("ideal basis cache and disk cache") {
  const auto dir = std::filesystem::temp_directory_path() / "icotk_gb_cache_test";
  std::filesystem::remove_all(dir);
  setenv("ICOTK_CACHE_DIR", dir.c_str(), 1);
  auto first = sigma_ideal().basis();
  CHECK(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator{}) == 1);
  auto second = sigma_ideal().basis();
  CHECK(first == second);
  // Corrupt the cached file: the loader must reject it and recompute.
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    std::ifstream in(e.path());
    std::string key;
    std::getline(in, key);
    in.close();
    std::ofstream out(e.path());
    out << key << "\nx0\n";
  }
  CHECK(sigma_ideal().basis() == first);
  unsetenv("ICOTK_CACHE_DIR");
  std::filesystem::remove_all(dir);
}
