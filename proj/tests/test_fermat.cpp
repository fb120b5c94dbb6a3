#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>
#include <set>

#include "icotk/errors.hpp"
#include "icotk/fermat/fermat.hpp"
#include "icotk/heights/heights.hpp"

using namespace icotk;

namespace {

bool on_surface(const std::vector<Int>& x) {
  Int e2 = 0, e4 = 0;
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      e2 += x[i] * x[j];
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) e4 += x[i] * x[j] * x[k] * x[l];
    }
  return e2 == 0 && e4 == 0;
}

std::set<ProjPoint> brute_force(int R) {
  std::set<ProjPoint> out;
  std::vector<Int> x(5);
  std::vector<int> c(5, -R);
  while (true) {
    bool nonzero = false;
    for (int i = 0; i < 5; ++i) {
      x[i] = c[i];
      nonzero |= c[i] != 0;
    }
    Int g = 0;
    for (const auto& v : x) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (nonzero && g == 1 && on_surface(x)) out.insert(ProjPoint(x));
    int i = 0;
    while (i < 5 && c[i] == R) c[i++] = -R;
    if (i == 5) break;
    ++c[i];
  }
  return out;
}

ProjPoint pt(std::vector<long> v) {
  std::vector<Int> c;
  for (long x : v) c.emplace_back(x);
  return ProjPoint(c);
}

}  // namespace

TEST_CASE("fermat instances") {
  FermatInstance a({1, 1, 1, 1, 1}, 3), b({1, 1, 1, 1, 2}, 4), c({6, 10, 15, 1, 1}, 2);
  CHECK(instance_nu(a) == 1);
  CHECK(instance_nu(b) == 2);
  CHECK(instance_nu(c) == 30);
  CHECK_THROWS_AS(FermatInstance({1, 0, 1, 1, 1}, 3), DomainError);
  const IcoModel m = instance_model(c);
  CHECK_FALSE(is_degenerate(m));
  CHECK(nu_f(m) == 30);
  CHECK(c.evaluate(pt({1, 0, 0, 0, 0})) == 6);
}

TEST_CASE("surface scan at small bounds") {
  const ScanReport r1 = scan_surface(1);
  REQUIRE(r1.points.size() == 5);
  for (const auto& p : r1.points) CHECK(p.is_trivial());
  CHECK(r1.nontrivial.empty());

  // Oracle: the full box [-3,3]^5. Every box point has three smallest |x_i| <= 3.
  const auto box = brute_force(3);
  for (ScanOptions opts : {ScanOptions{}, ScanOptions{2, true}}) {
    const ScanReport r3 = scan_surface(3, opts);
    const std::set<ProjPoint> got(r3.points.begin(), r3.points.end());
    for (const auto& p : box) CHECK_MESSAGE(got.count(p), p.to_string());
    for (const auto& p : r3.points) {
      CHECK(on_surface(p.coords()));
      bool small = true;
      for (const auto& v : p.coords()) small &= abs(v) <= 3;
      if (small) CHECK(box.count(p));
    }
  }
}

TEST_CASE("complete singular sweep recovers the points the default range misses") {
  const auto box = brute_force(2);
  const ScanReport def = scan_surface(1), full = scan_surface(1, {0, true});
  const std::set<ProjPoint> d(def.points.begin(), def.points.end()), f(full.points.begin(), full.points.end());
  CHECK(std::includes(f.begin(), f.end(), d.begin(), d.end()));
  CHECK(f.count(pt({0, 0, 1, -2, -2})));
  CHECK_FALSE(d.count(pt({0, 0, 1, -2, -2})));
  for (const auto& p : box) {
    std::vector<Int> a;
    for (const auto& v : p.coords()) a.push_back(abs(v));
    std::sort(a.begin(), a.end());
    if (a[2] <= 1) CHECK_MESSAGE(f.count(p), p.to_string());
  }
}

TEST_CASE("scan properties") {
  const ScanReport a = scan_surface(8, {3, false}), b = scan_surface(12, {1, false});
  const std::set<ProjPoint> sa(a.points.begin(), a.points.end()), sb(b.points.begin(), b.points.end());
  CHECK(std::includes(sb.begin(), sb.end(), sa.begin(), sa.end()));
  CHECK(std::is_sorted(b.points.begin(), b.points.end()));
  CHECK(a.trivial.size() + a.nontrivial.size() == a.points.size());
  for (const auto& p : b.points) {
    CHECK(on_surface(p.coords()));
    if (p.is_trivial()) CHECK(point_height(p).is_zero());
    std::vector<Int> v = p.coords();
    std::rotate(v.begin(), v.begin() + 1, v.end());
    CHECK(sb.count(ProjPoint(v)));
    std::swap(v[0], v[3]);
    CHECK(sb.count(ProjPoint(v)));
  }
  // Thread count does not change the result.
  CHECK(scan_surface(12, {4, false}).points == b.points);
}

TEST_CASE("scan contains the image of (1,2,4)") {
  const ScanReport r = scan_surface(180, {4, false});
  const std::set<ProjPoint> s(r.points.begin(), r.points.end());
  CHECK(s.count(pt({126, -140, 315, 630, -180})));
  CHECK(s.count(pt({-140, 630, -180, 126, 315})));
}

TEST_CASE("instance scans") {
  CHECK(scan_instance(FermatInstance({1, 1, 1, 1, 1}, 2), 1).points.empty());
  CHECK(scan_instance(FermatInstance({1, -1, 1, 1, 1}, 5), 1).points.empty());
  // An instance through a scanned point: a_i = x_4^2 for i < 4, a_4 = -sum_{i<4} x_i^2.
  const ScanReport all = scan_surface(10);
  std::optional<FermatInstance> found;
  for (const auto& p : all.nontrivial) {
    if (p[4] == 0) continue;
    Int rest = 0;
    for (std::size_t i = 0; i < 4; ++i) rest += p[i] * p[i];
    const Int w = p[4] * p[4];
    found.emplace(std::array<Int, 5>{w, w, w, w, -rest}, 2);
    break;
  }
  REQUIRE(found);
  const FermatInstance& inst = *found;
  const ScanReport r = scan_instance(inst, 10);
  CHECK_FALSE(r.points.empty());
  for (const auto& p : r.points) {
    CHECK(inst.evaluate(p) == 0);
    const UnitEquation eq = unit_reduce(inst, p);
    Rat s = 0;
    for (const auto& u : eq.u) {
      s += u;
      CHECK(is_s_unit(u, eq.S));
    }
    CHECK(s == 1);
    CHECK(eq.on_surface);
  }
}

TEST_CASE("unit reduction") {
  const UnitEquation eq = unit_reduce(FermatInstance({1, 1, -2, 1, 1}, 3), pt({1, 1, 1, 0, 0}));
  CHECK(eq.k == 2);
  CHECK(eq.u == std::vector<Rat>{Rat(1, 2), Rat(1, 2)});
  CHECK(eq.S == std::vector<Int>{2});
  CHECK_FALSE(eq.degenerate);
  CHECK_FALSE(eq.on_surface);

  CHECK_THROWS_AS(unit_reduce(FermatInstance({1, 1, 1, 1, 1}, 2), pt({1, 1, 1, 0, 0})), DomainError);

  const auto vs = vanishing_subsets({Rat(1), Rat(3, 5), Rat(-3, 5)});
  REQUIRE(vs.size() == 1);
  CHECK(vs[0] == std::vector<std::size_t>{1, 2});

  // Synthetic instances: pick x, then choose a so the instance vanishes at x.
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Int> x(5);
    for (auto& v : x) v = d(rng);
    x[4] = trial % 2 ? 0 : 1 + trial % 5;
    if (x[0] == 0) x[0] = 1;
    const unsigned n = 2 + trial % 3;
    std::array<Int, 5> a{};
    Int rest = 0;
    std::size_t ref = 0;
    for (std::size_t i = 0; i < 5; ++i) {
      a[i] = 1 + static_cast<long>(rng() % 7);
      if (x[i] != 0) ref = i;
    }
    if (ref == 0) continue;
    // a_ref x_ref^n = -sum_{i != ref} a_i x_i^n, solved by scaling.
    Int xr;
    mpz_pow_ui(xr.get_mpz_t(), x[ref].get_mpz_t(), n);
    for (std::size_t i = 0; i < 5; ++i) {
      if (i == ref) continue;
      Int p;
      mpz_pow_ui(p.get_mpz_t(), x[i].get_mpz_t(), n);
      rest += a[i] * p;
    }
    if (rest == 0) continue;
    for (std::size_t i = 0; i < 5; ++i)
      if (i != ref) a[i] *= xr;
    a[ref] = -rest;
    Int g = 0;
    for (const auto& v : x) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    for (auto& v : x) v /= g;
    const FermatInstance inst(a, n);
    const ProjPoint p(x);
    REQUIRE(inst.evaluate(p) == 0);
    const UnitEquation eq = unit_reduce(inst, p);
    Rat s = 0;
    Int prod = 1;
    for (const auto& u : eq.u) s += u;
    for (std::size_t i : eq.indices) prod *= inst.a[i] * p[i];
    CHECK(s == 1);
    CHECK(eq.k + 1 == eq.indices.size());
    CHECK(eq.S == prime_factors(prod));
  }
}

TEST_CASE("Z membership") {
  CHECK(z_member(pt({2, 2, 1, 1, 0})));
  CHECK_FALSE(z_member(pt({1, 0, 0, 0, 0})));
  CHECK(z_member(pt({1, 1, 1})));
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-3, 3);
  int agree = 0;
  for (int i = 0; i < 10000; ++i) {
    std::vector<Int> x(5);
    for (auto& v : x) v = d(rng);
    agree += z_member_ratio(x) == z_member_scheme(x);
  }
  CHECK(agree == 10000);
  CHECK(z_triviality_scan(1).points.empty());
  CHECK(z_triviality_scan(12).points.empty());
}

TEST_CASE("bounded S-unit search") {
  const auto s2 = sunit_bounded({2}, 2, 2);
  const auto has = [&](Rat a, Rat b) { return std::count(s2.begin(), s2.end(), std::vector<Rat>{a, b}) == 1; };
  CHECK(has(2, -1));
  CHECK(has(-1, 2));
  CHECK(has(Rat(1, 2), Rat(1, 2)));
  CHECK_FALSE(has(Rat(1, 4), Rat(3, 4)));
  CHECK_FALSE(has(4, -3));
  for (const auto& u : s2) CHECK(u[0] + u[1] == 1);
  CHECK(sunit_bounded({}, 2, 3).empty());
  CHECK(sunit_bounded({2, 3}, 1, 0) == std::vector<std::vector<Rat>>{{Rat(1)}});
  CHECK_THROWS_AS(sunit_bounded({2, 3, 5, 7}, 4, 3, 1000), BudgetExceeded);

  // Oracle: for S = {2, 3} and k = 2, v = 1 - u must itself be a {2,3}-unit.
  const auto s23 = sunit_bounded({2, 3}, 2, 3);
  std::size_t count = 0;
  for (int e2 = -3; e2 <= 3; ++e2)
    for (int e3 = -3; e3 <= 3; ++e3)
      for (int sg : {1, -1}) {
        Rat u = sg;
        for (int i = 0; i < std::abs(e2); ++i) u = e2 > 0 ? Rat(u * 2) : Rat(u / 2);
        for (int i = 0; i < std::abs(e3); ++i) u = e3 > 0 ? Rat(u * 3) : Rat(u / 3);
        const Rat v = 1 - u;
        if (v == 0 || !is_s_unit(v, {2, 3})) continue;
        Int num = abs(v.get_num()), den = v.get_den();
        bool in_box = true;
        for (long p : {2L, 3L}) {
          int e = 0;
          while (num % p == 0) num /= p, ++e;
          while (den % p == 0) den /= p, --e;
          in_box &= std::abs(e) <= 3;
        }
        count += in_box;
      }
  CHECK(s23.size() == count);
}
