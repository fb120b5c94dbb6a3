#include <random>

#include "doctest.h"
#include "icotk/algebra/linalg.hpp"
#include "icotk/algebra/poly.hpp"
#include "icotk/algebra/univariate.hpp"
#include "icotk/errors.hpp"

using namespace icotk;

namespace {

Poly random_poly(const RingPtr& ring, std::mt19937_64& rng, unsigned max_deg, int terms) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> expo(0, static_cast<int>(max_deg));
  std::vector<Poly::Term> ts;
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    for (std::size_t i = 0; i < ring->size(); ++i) m.set(i, static_cast<std::uint16_t>(expo(rng) / 2));
    ts.push_back({m, make_rat(coeff(rng), 1 + (k % 3))});
  }
  return Poly::from_terms(ring, std::move(ts));
}

// Independent radical oracle: naive trial division over all d <= |n|.
Int naive_radical(long n) {
  n = n < 0 ? -n : n;
  long r = 1;
  for (long p = 2; p <= n; ++p) {
    if (n % p) continue;
    r *= p;
    while (n % p == 0) n /= p;
  }
  return r;
}

}  // namespace

TEST_CASE("int_radical") {
  CHECK(int_radical(1) == 1);
  CHECK(int_radical(-1) == 1);
  CHECK(int_radical(12) == 6);
  CHECK(int_radical(2310) == 2310);
  CHECK_THROWS_AS(int_radical(0), DomainError);
  for (long n = 2; n < 3000; n += 7) CHECK(int_radical(n) == naive_radical(n));
  // Product of two primes above the trial-division limit goes through rho.
  const Int p("1000003"), q("1000033");
  CHECK(int_radical(p * p * q) == p * q);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    const Int a = static_cast<long>(rng() % 100000) + 1, b = static_cast<long>(rng() % 100000) + 1;
    CHECK(int_radical(a * a) == int_radical(a));
    const Int prod = int_radical(a) * int_radical(b);
    CHECK(prod % int_radical(a * b) == 0);
  }
}

TEST_CASE("factor budget exhaustion is an error") {
  FactorBudget tiny{100, 10};
  const Int p("1000003"), q("1000033");
  CHECK_THROWS_AS(int_radical(p * q, tiny), UnfactoredInput);
}

TEST_CASE("poly_parse and printing") {
  auto r4 = p4_ring();
  auto p = poly_parse("x0^2 - x1*x2", r4);
  CHECK(p.size() == 2);
  CHECK(p.degree() == 2);
  CHECK(poly_parse(p.to_string(), r4) == p);

  auto r2 = p2_ring();
  auto t0 = poly_parse("(y-z)*(x*y+x*z-z^2)", r2);
  CHECK(t0 == poly_parse("x*y^2 - x*z^2 - y*z^2 + z^3", r2));

  try {
    poly_parse("x0^", r4);
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 3);
  }
  CHECK_THROWS_AS(poly_parse("x + w", r2), ParseError);
  CHECK_THROWS_AS(poly_parse("x + (y", r2), ParseError);
  CHECK(poly_parse(" 3/6 * x -  - y ", r2) == poly_parse("1/2*x + y", r2));
  CHECK(poly_parse("0", r2).is_zero());
  CHECK(poly_parse("-x^2*y + 7", r2).to_string() == "-x^2*y + 7");
}

TEST_CASE("parse and print round trip on random polynomials") {
  auto r = p4_ring();
  std::mt19937_64 rng(11);
  for (int k = 0; k < 100; ++k) {
    auto p = random_poly(r, rng, 5, 6);
    CHECK(poly_parse(p.to_string(), r) == p);
  }
}

TEST_CASE("ring axioms on random triples") {
  auto r = p2_ring();
  std::mt19937_64 rng(5);
  for (int k = 0; k < 40; ++k) {
    auto a = random_poly(r, rng, 4, 5), b = random_poly(r, rng, 4, 5), c = random_poly(r, rng, 4, 5);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("elementary_symmetric") {
  auto r = p4_ring();
  auto s2 = elementary_symmetric(r, 2, 5);
  auto s4 = elementary_symmetric(r, 4, 5);
  CHECK(s2.size() == 10);
  CHECK(elementary_symmetric(r, 3, 5).size() == 10);
  std::vector<Int> ones(5, 1), e1{1, 0, 0, 0, 0};
  CHECK(s2.evaluate(std::span<const Int>(ones)) == 10);
  CHECK(s2.evaluate(std::span<const Int>(e1)) == 0);
  CHECK(s4.evaluate(std::span<const Int>(e1)) == 0);
  std::vector<Int> q{126, -140, 315, 630, -180};
  CHECK(s2.evaluate(std::span<const Int>(q)) == 0);
  CHECK(s4.evaluate(std::span<const Int>(q)) == 0);
  CHECK_THROWS_AS(elementary_symmetric(r, 0, 5), DomainError);
  CHECK_THROWS_AS(elementary_symmetric(r, 6, 5), DomainError);
}

TEST_CASE("evaluate examples") {
  auto r = p2_ring();
  auto t3 = poly_parse("z*(y*z-x*z+x^2-y^2)", r);
  std::vector<Int> pt{1, 2, 3};
  CHECK(t3.evaluate(std::span<const Int>(pt)) == 0);
}

TEST_CASE("substitute") {
  auto r = p2_ring();
  auto x = Poly::variable(r, 0), y = Poly::variable(r, 1), z = Poly::variable(r, 2);
  CHECK((x + y).substitute({x * x, y * y, z}) == x * x + y * y);
  CHECK_THROWS_AS((x + y).substitute({x, y}), DomainError);

  std::mt19937_64 rng(17);
  for (int k = 0; k < 30; ++k) {
    auto p = random_poly(r, rng, 4, 4);
    std::vector<Poly> imgs{random_poly(r, rng, 2, 3), random_poly(r, rng, 2, 3), random_poly(r, rng, 2, 3)};
    std::vector<Rat> pt{make_rat(static_cast<long>(rng() % 7) - 3, 2), make_rat(static_cast<long>(rng() % 5)),
                        make_rat(static_cast<long>(rng() % 9) - 4, 3)};
    std::vector<Rat> vals;
    for (auto& q : imgs) vals.push_back(q.evaluate(std::span<const Rat>(pt)));
    CHECK(p.substitute(imgs).evaluate(std::span<const Rat>(pt)) == p.evaluate(std::span<const Rat>(vals)));
  }
}

TEST_CASE("exact_div") {
  auto r = p2_ring();
  auto p = poly_parse("x^2 - y^2", r);
  CHECK(exact_div(p, poly_parse("x - y", r)) == poly_parse("x + y", r));
  CHECK_THROWS_AS(exact_div(poly_parse("x^2 + y^2", r), poly_parse("x - y", r)), NotDivisible);
  std::mt19937_64 rng(23);
  for (int k = 0; k < 20; ++k) {
    auto a = random_poly(r, rng, 4, 4), b = random_poly(r, rng, 4, 4);
    if (b.is_zero()) continue;
    CHECK(exact_div(a * b, b) == a);
  }
}

TEST_CASE("content_primitive") {
  auto r = p2_ring();
  auto [c1, q1] = content_primitive(poly_parse("4/6*x + 2*y", r));
  CHECK(c1 == make_rat(2, 3));
  CHECK(q1 == poly_parse("x + 3*y", r));
  auto [c2, q2] = content_primitive(poly_parse("-2*x", r));
  CHECK(c2 == -2);
  CHECK(q2 == poly_parse("x", r));
  auto [c3, q3] = content_primitive(poly_parse("7", r));
  CHECK(c3 == 7);
  CHECK(q3 == poly_parse("1", r));
  CHECK_THROWS_AS(content_primitive(Poly(r)), DomainError);
  std::mt19937_64 rng(29);
  for (int k = 0; k < 20; ++k) {
    auto p = random_poly(r, rng, 4, 4);
    if (p.is_zero()) continue;
    auto [c, q] = content_primitive(p);
    CHECK(c * q == p);
    auto [c_again, q_again] = content_primitive(q);
    CHECK(c_again == 1);
    CHECK(q_again == q);
  }
}

TEST_CASE("linear algebra kernel") {
  RatMatrix m(2, 3);
  m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 3;
  m.at(1, 0) = 2; m.at(1, 1) = 4; m.at(1, 2) = 6;
  CHECK(m.rank() == 1);
  auto ker = m.kernel();
  CHECK(ker.size() == 2);
  for (auto& v : ker) CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
  RowSpace rs(3);
  CHECK(rs.insert({1, 2, 3}));
  CHECK_FALSE(rs.insert({2, 4, 6}));
  CHECK(rs.insert({0, 1, 0}));
  CHECK(rs.contains({1, 0, 3}));
  CHECK_FALSE(rs.contains({0, 0, 1}));
}

TEST_CASE("univariate helpers") {
  UPoly p({Rat(-1), Rat(0), Rat(1)});  // t^2 - 1
  UPoly q({Rat(1), Rat(1)});          // t + 1
  CHECK(gcd(p, q).coeffs() == q.coeffs());
  UPoly sq = p * p * q;                // (t-1)^2 (t+1)^3
  CHECK(squarefree_part(sq).coeffs() == p.coeffs());
  BinaryForm g{2, {Rat(-1), Rat(0), Rat(1)}};
  BinaryForm h{3, {Rat(0), Rat(-1), Rat(0), Rat(1)}};
  CHECK(roots_contained(g, h));
  CHECK_FALSE(roots_contained(h, g));
  BinaryForm w{1, {Rat(1), Rat(0)}};  // the form w, root at infinity
  CHECK_FALSE(roots_contained(w, g));
  CHECK(roots_contained(w, BinaryForm{2, {Rat(0), Rat(1), Rat(0)}}));
}
