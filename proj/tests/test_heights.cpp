#include <cmath>

#include "doctest.h"
#include "icotk/errors.hpp"
#include "icotk/heights/heights.hpp"

using namespace icotk;

namespace {

const Int kT("1000000000000");

ProjPoint pt(std::initializer_list<long> c) {
  std::vector<Int> v;
  for (long x : c) v.push_back(x);
  return ProjPoint(v);
}

}  // namespace

TEST_CASE("point heights") {
  CHECK(point_height(pt({1, 1, 0, 1, 1})).is_zero());
  CHECK(point_height(pt({1, 1, 0, 1, 1})).natural_log() == "0");
  CHECK(point_height(pt({4, 6, 10})).max_coord == 5);
  const auto h = point_height(pt({126, -140, 315, 630, -180}));
  CHECK(h.max_coord == 630);
  CHECK(std::abs(std::stod(h.natural_log()) - std::log(630.0)) < 1e-12);
  CHECK(point_height(pt({0, -1, 1})).is_zero());
  CHECK_FALSE(point_height(pt({0, 2, 1})).is_zero());
}

TEST_CASE("LogBound arithmetic and comparison") {
  const LogBound a = LogBound::log10_of(8);
  CHECK(a == LogBound::log10_of(2, 3));
  CHECK(LogBound::log10_of(1000) == LogBound::constant(3));
  CHECK(LogBound::log10_of(1000).terms().empty());
  // log10(5) = 1 - log10(2).
  CHECK(LogBound::log10_of(5) + LogBound::log10_of(2) == LogBound::constant(1));
  CHECK(LogBound::log10_of(50) == LogBound::constant(2) - LogBound::log10_of(2));
  CHECK(LogBound::compare(LogBound::log10_of(3), LogBound::log10_of(2)) > 0);
  CHECK(LogBound::compare(LogBound::log10_of(7), LogBound::constant(Rat(845, 1000))) > 0);
  CHECK(LogBound::compare(LogBound::log10_of(7), LogBound::constant(Rat(846, 1000))) < 0);
  CHECK((a * Rat(2)).decomposition() == "2*log10(8)");
  CHECK((LogBound::constant(4) - LogBound::log10_of(3)).decomposition() == "4 - log10(3)");
  CHECK(LogBound::constant(0).decomposition() == "0");
}

TEST_CASE("rendering rounds up") {
  const LogBound b = LogBound::log10_of(2, 24);
  const std::string r = b.render(50);
  CHECK(r.rfind("7.2247198959355486851", 0) == 0);
  // Upward: truncating the rendering and comparing exactly never undercuts.
  for (unsigned digits : {1u, 5u, 20u, 50u}) {
    const std::string s = b.render(digits);
    const auto dot = s.find('.');
    Int den = 1;
    for (unsigned i = 0; i < digits; ++i) den *= 10;
    const Rat v = make_rat(Int(s.substr(0, dot) + s.substr(dot + 1)), den);
    CHECK(LogBound::compare(LogBound::constant(v), b) >= 0);
  }
  CHECK(LogBound::constant(Rat(1, 3)).render(3) == "0.334");
}

TEST_CASE("Theorem E certificates") {
  const auto c1 = bound_thmE(1);
  CHECK(c1.bound == LogBound::constant(Rat(kT)));
  CHECK(c1.bound.render() == "1000000000000");
  CHECK(tag_name(c1.tag) == "ThmE/CorXf");
  const auto c2 = bound_thmE(2);
  CHECK(c2.bound.render(4) == "1000000000007.2248");
  const auto c3 = bound_thmE(2310);
  CHECK(c3.bound == LogBound::constant(Rat(kT)) + LogBound::log10_of(2310, 24));
  CHECK(LogBound::compare(c3.bound, c2.bound) > 0);
  CHECK_THROWS_AS(bound_thmE(0), DomainError);
  CHECK(bound_corPullback(7).bound == bound_thmE(7).bound);
}

TEST_CASE("Corollary D certificates") {
  const auto c = bound_corD(1, 1);
  const Int kappa = 16777216;
  CHECK(c.bound == LogBound::log10_of(8, Rat(kappa * kappa)));
  bool echoed = false;
  for (const auto& [k, v] : c.inputs) echoed = echoed || (k == "kappa" && v == "16777216");
  CHECK(echoed);
  CHECK(bound_corD(1, 10).bound == c.bound + LogBound::constant(Rat(kappa)));
  for (const auto& [k, v] : bound_corD(2, 1).inputs)
    if (k == "kappa") CHECK(v == "67108864");
  CHECK(LogBound::compare(bound_corD(2, 1).bound, c.bound) > 0);
  CHECK(LogBound::compare(bound_corD(1, 3).bound, bound_corD(1, 2).bound) > 0);
}

TEST_CASE("Corollary F certificates") {
  auto nu_of = [](const HeightCertificate& c) {
    for (const auto& [k, v] : c.inputs)
      if (k == "nu") return v;
    return std::string();
  };
  CHECK(nu_of(bound_corF({1, 1, 1, 1, 1})) == "1");
  CHECK(bound_corF({1, 1, 1, 1, 1}).bound == LogBound::constant(Rat(kT)));
  CHECK(nu_of(bound_corF({1, 1, 1, 1, 2})) == "2");
  CHECK(nu_of(bound_corF({2, 3, 4, 9, 5})) == "30");
  CHECK_THROWS_AS(bound_corF({1, 0, 1, 1, 1}), DomainError);
  CHECK(tag_name(bound_corF({1, 1, 1, 1, 1}).tag) == "CorF");
}

TEST_CASE("Theorem C certificates") {
  CHECK(bound_thmC(1, 1, "0").bound == LogBound::constant(Rat(kT)));
  CHECK(bound_thmC(1, 1, "10^1000000000000").bound == LogBound::constant(Rat(kT)) + LogBound::log10_of(2));
  CHECK(bound_thmC(3, 1, "0").bound == LogBound::constant(Rat(kT)) + LogBound::log10_of(3));
  // A small h(X) is dominated by the main term.
  CHECK(bound_thmC(1, 1, "12.5").bound == LogBound::constant(Rat(kT)) + LogBound::log10_of(2));
  CHECK(LogBound::compare(bound_thmC(1, 1, "10^(1000000000001)").bound, LogBound::constant(Rat(kT) + 1)) > 0);
  CHECK_THROWS_AS(bound_thmC(1, 1, "-3"), DomainError);
  CHECK(parse_height_value("3/4").has_value());
  CHECK_FALSE(parse_height_value("0.0").has_value());
  CHECK(*parse_height_value("0.5") == LogBound::constant(0) - LogBound::log10_of(2));
}

TEST_CASE("bounds are monotone") {
  for (long nu = 1; nu < 40; ++nu) {
    CHECK(LogBound::compare(bound_thmE(nu + 1).bound, bound_thmE(nu).bound) > 0);
    CHECK(LogBound::compare(bound_thmC(nu + 1, 1, "0").bound, bound_thmC(nu, 1, "0").bound) > 0);
    CHECK(LogBound::compare(bound_corD(1, nu + 1).bound, bound_corD(1, nu).bound) > 0);
  }
  CHECK(LogBound::compare(containing_model_height_bound(2, 5), containing_model_height_bound(1, 5)) > 0);
}
