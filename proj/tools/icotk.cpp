// icotk: command-line front end. Every run writes one JSON report to stdout.
// Exit codes: 0 ok, 1 negative verdict, 2 usage or invalid input, 3 budget.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "icotk/errors.hpp"
#include "icotk/fermat/fermat.hpp"
#include "icotk/groebner/groebner.hpp"
#include "icotk/heights/heights.hpp"
#include "icotk/ico/models.hpp"
#include "icotk/ico/surface.hpp"
#include "icotk/plane/curves.hpp"

using json = nlohmann::json;
using namespace icotk;

namespace {

struct Outcome {
  json result;
  int code = 0;
  std::vector<std::string> provenance;
};

struct Globals {
  std::uint64_t gb_steps = 10'000'000;
  std::uint64_t factor_budget = 1'000'000;
  unsigned samples = 25;
  std::uint64_t seed = 1;

  FactorBudget factor() const { return {factor_budget, 2 * factor_budget}; }
};

std::string read_arg(const std::string& s) {
  if (s.empty() || s[0] != '@') return s;
  std::ifstream in(s.substr(1));
  if (!in) throw DomainError("cannot read " + s.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

Int parse_int(const std::string& s) {
  const auto b = s.find_first_not_of(" \t"), e = s.find_last_not_of(" \t");
  if (b == std::string::npos) throw DomainError("empty integer");
  std::string t = s.substr(b, e - b + 1);
  if (t[0] == '+') t = t.substr(1);
  Int x;
  if (x.set_str(t, 10) != 0) throw DomainError("bad integer '" + t + "'");
  return x;
}

Rat parse_rat(const std::string& s) {
  const auto b = s.find_first_not_of(" \t"), e = s.find_last_not_of(" \t");
  if (b == std::string::npos) throw DomainError("empty number");
  std::string t = s.substr(b, e - b + 1);
  if (t[0] == '+') t = t.substr(1);
  Rat x;
  if (x.set_str(t, 10) != 0) throw DomainError("bad number '" + t + "'");
  x.canonicalize();
  return x;
}

std::vector<Poly> parse_polys(const std::string& text, const RingPtr& ring) {
  std::vector<Poly> out;
  for (const auto& p : split_csv(read_arg(text))) out.push_back(poly_parse(p, ring));
  return out;
}

json strings(const std::vector<Poly>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

json points(const std::vector<ProjPoint>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

json certificate(const HeightCertificate& c) {
  json inputs = json::object();
  for (const auto& [k, v] : c.inputs) inputs[k] = v;
  return {{"tag", tag_name(c.tag)},
          {"inputs", inputs},
          {"unit", c.unit},
          {"log10_bound_decomposition", c.bound.decomposition()},
          {"log10_bound_rendered", c.bound.render()}};
}

json scan_json(const ScanReport& r) {
  return {{"bound", r.bound},
          {"strategy", r.strategy},
          {"points", points(r.points)},
          {"trivial", points(r.trivial)},
          {"nontrivial", points(r.nontrivial)},
          {"count", r.points.size()},
          {"millis", r.millis}};
}

FermatInstance parse_instance(const std::string& a, unsigned n) {
  const auto parts = split_csv(a);
  if (parts.size() != 5) throw DomainError("expected five coefficients a0,..,a4");
  std::array<Int, 5> c;
  for (std::size_t i = 0; i < 5; ++i) c[i] = parse_int(parts[i]);
  return FermatInstance(c, n);
}

std::vector<Rat> random_coefficients(std::size_t count, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(1, 6);
  std::vector<Rat> w(count);
  for (auto& x : w) x = c(rng) * (rng() % 2 ? 1 : -1);
  return w;
}

json checks_json(const std::vector<std::pair<std::string, bool>>& checks, int* code) {
  json a = json::array();
  for (const auto& [name, ok] : checks) {
    a.push_back({{"name", name}, {"passed", ok}});
    if (!ok) *code = 1;
  }
  return a;
}

// Suites ---------------------------------------------------------------------

Outcome suite_identities(const Globals& g) {
  Outcome o;
  json runs = json::array();
  for (auto mode : {IdentityMode::Sampled, IdentityMode::Symbolic}) {
    const IdentityReport rep = verify_identities(mode, g.samples, g.seed);
    for (const auto& c : rep.checks) {
      runs.push_back({{"mode", mode == IdentityMode::Sampled ? "sampled" : "symbolic"},
                      {"name", c.name},
                      {"passed", c.passed},
                      {"detail", c.detail}});
      if (!c.passed) o.code = 1;
    }
  }
  o.result = {{"checks", runs}};
  o.provenance = {"tau/rho birational identities"};
  return o;
}

Outcome suite_dimensions() {
  Outcome o;
  const Ideal& I = FixedGeometry::get().surface_ideal();
  std::vector<std::pair<std::string, bool>> checks;
  json values = json::array();
  for (long n = 1; n <= 5; ++n) {
    const Int h = hilbert_function(I, n);
    // The Hilbert polynomial 4n^2 - 4n + 6 takes over from n = 2.
    const Int expect = n == 1 ? 5 : 4 * n * n - 4 * n + 6;
    values.push_back(h.get_str());
    checks.push_back({"h(" + std::to_string(n) + ") = " + expect.get_str(), h == expect && dim_An(n) == h});
  }
  o.result = {{"hilbert_function", values}, {"checks", checks_json(checks, &o.code)}};
  o.provenance = {"dimension formula 4n^2 - 4n + 6"};
  return o;
}

Outcome suite_genus(const Globals& g) {
  Outcome o;
  std::mt19937_64 rng(g.seed);
  std::vector<std::pair<std::string, bool>> checks;
  json rows = json::array();
  for (unsigned n = 1; n <= 3; ++n) {
    IcoModel model = general_model(n, random_coefficients(dim_An(n), rng));
    while (is_degenerate(model)) model = general_model(n, random_coefficients(dim_An(n), rng));
    const Ideal I = model_ideal(model);
    const auto [dim, deg] = dim_degree(I);
    const Int genus = arithmetic_genus(I);
    rows.push_back({{"n", n}, {"dim", dim}, {"degree", deg.get_str()}, {"genus", genus.get_str()}});
    checks.push_back({"genus(n=" + std::to_string(n) + ") = " + genus_general(n).get_str(),
                      dim == 1 && deg == 8 * n && genus == genus_general(n)});
  }
  o.result = {{"models", rows}, {"checks", checks_json(checks, &o.code)}};
  o.provenance = {"genus formula (2n+1)^2"};
  return o;
}

Outcome suite_ttau() {
  Outcome o;
  const auto& G = FixedGeometry::get();
  const TTau t = ttau_points();
  std::vector<std::pair<std::string, bool>> checks;
  for (const auto& p : t.rational) {
    std::vector<Rat> q(p.coords().begin(), p.coords().end());
    bool zero = true;
    for (const auto& ti : G.tau()) zero &= ti.evaluate(q) == 0;
    checks.push_back({"tau" + p.to_string() + " = 0", zero});
  }
  bool zero = true;
  for (const auto& ti : G.tau()) zero &= evaluate_golden(ti, t.quadratic).is_zero();
  checks.push_back({"tau(1, 1, t) = 0 mod t^2 - t - 1", zero});
  const std::vector<Rat> p110{1, 1, 0};
  checks.push_back({"tau_3(1, 1, 0) = 1", G.tau()[3].evaluate(p110) == 1});
  o.result = {{"rational_points", points(t.rational)}, {"checks", checks_json(checks, &o.code)}};
  o.provenance = {"base locus T_tau"};
  return o;
}

Outcome suite_fermat_smoke(const Globals& g) {
  Outcome o;
  std::vector<std::pair<std::string, bool>> checks;
  const ScanReport r1 = scan_surface(1);
  const std::vector<ProjPoint> e(FixedGeometry::get().e().begin(), FixedGeometry::get().e().end());
  std::vector<ProjPoint> es = e;
  std::sort(es.begin(), es.end());
  checks.push_back({"scan(1) = {e_i}", r1.points == es});
  const ScanReport r = scan_surface(200);
  checks.push_back({"scan(200) contains (126, -140, 315, 630, -180)",
                    std::binary_search(r.points.begin(), r.points.end(),
                                       ProjPoint(std::vector<Int>{126, -140, 315, 630, -180}))});
  checks.push_back({"z-scan(30) empty", z_triviality_scan(30).points.empty()});
  const UnitEquation eq =
      unit_reduce(FermatInstance({1, 1, -2, 1, 1}, 3), ProjPoint(std::vector<Int>{1, 1, 1, 0, 0}), g.factor());
  checks.push_back({"unit_reduce synthetic", eq.k == 2 && eq.u == std::vector<Rat>{Rat(1, 2), Rat(1, 2)} &&
                                                 eq.S == std::vector<Int>{2} && !eq.degenerate});
  o.result = {{"scan_200_points", r.points.size()}, {"checks", checks_json(checks, &o.code)}};
  o.provenance = {"Fermat surface scan", "unit equation reduction"};
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const auto start = std::chrono::steady_clock::now();
  Globals g;
  CLI::App app{"icotk: icosahedron surface toolkit"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ICOTK_VERSION));
  app.add_option("--gb-steps", g.gb_steps, "Groebner step budget")->capture_default_str();
  app.add_option("--factor-budget", g.factor_budget, "trial division limit for factoring")->capture_default_str();
  app.add_option("--samples", g.samples, "sample count for sampled checks")->capture_default_str();
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();

  std::string command;
  json params = json::object();
  std::function<Outcome()> action;
  auto leaf = [&](CLI::App* sub, std::string name, std::function<Outcome()> f) {
    sub->callback([&command, &action, name = std::move(name), f = std::move(f)] {
      command = name;
      action = f;
    });
  };

  // verify
  std::string mode = "sampled";
  auto* verify = app.add_subcommand("verify", "check the tau/rho identities");
  verify->add_option("--mode", mode)->check(CLI::IsMember({"symbolic", "sampled"}))->capture_default_str();
  leaf(verify, "verify", [&] {
    params["mode"] = mode;
    const IdentityReport rep =
        verify_identities(mode == "symbolic" ? IdentityMode::Symbolic : IdentityMode::Sampled, g.samples, g.seed);
    Outcome o;
    json checks = json::array();
    for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    o.result = {{"checks", checks}, {"all_passed", rep.all_passed()}};
    o.code = rep.all_passed() ? 0 : 1;
    o.provenance = {"tau/rho birational identities"};
    return o;
  });

  // tau check
  std::string F_text;
  auto* tau = app.add_subcommand("tau", "criterion (tau) for plane curves");
  tau->require_subcommand(1);
  auto* tau_check = tau->add_subcommand("check", "decide criterion (tau) for V(F)");
  tau_check->add_option("-F", F_text, "homogeneous F in x, y, z, or @file")->required();
  leaf(tau_check, "tau check", [&] {
    params["F"] = F_text;
    const PlaneCurve F(poly_parse(read_arg(F_text), p2_ring()));
    const TauReport rep = check_tau(F);
    Outcome o;
    json degrees = json::array();
    for (int d : rep.separating_degree) degrees.push_back(d);
    o.result = {{"curve", F.poly().to_string()},
                {"verdict", rep.verdict == TauVerdict::Satisfies ? "satisfies" : "fails"},
                {"stage", stage_name(rep.stage)},
                {"witness", rep.witness},
                {"witness_e", rep.witness_e},
                {"image_ideal", strings(rep.image_generators)},
                {"degrees", degrees},
                {"millis", rep.millis}};
    o.code = rep.verdict == TauVerdict::Satisfies ? 0 : 1;
    o.provenance = {"criterion (tau)"};
    return o;
  });

  // ico info
  std::string f_text;
  auto* ico = app.add_subcommand("ico", "ico models");
  ico->require_subcommand(1);
  auto* ico_info = ico->add_subcommand("info", "degeneracy, diagonal, nu_f and height bound of a model");
  ico_info->add_option("-f", f_text, "polynomials in x0..x4, comma separated, or @file")->required();
  leaf(ico_info, "ico info", [&] {
    params["f"] = f_text;
    const IcoModel model(parse_polys(f_text, p4_ring()));
    Outcome o;
    json diag = json::array();
    for (const auto& row : model.diagonal()) {
      json r = json::array();
      for (const auto& a : row) r.push_back(a.get_str());
      diag.push_back(r);
    }
    const bool degenerate = is_degenerate(model);
    const Int nu = nu_f(model, g.factor());
    o.result = {{"degenerate", degenerate},
                {"diagonal", diag},
                {"nu", nu.get_str()},
                {"is_curve", is_curve(model)},
                {"bound", degenerate ? json(nullptr) : certificate(bound_thmE(nu))}};
    o.provenance = {"ico model degeneracy", "Theorem E"};
    return o;
  });

  // family curve
  unsigned fam_n = 1;
  std::string fam_v;
  auto* family = app.add_subcommand("family", "plane curve families");
  family->require_subcommand(1);
  auto* family_c = family->add_subcommand("curve", "F_v = tau^*(sum v_i s_i)");
  family_c->add_option("-n", fam_n)->required()->check(CLI::Range(1u, 64u));
  family_c->add_option("-v", fam_v, "coefficients, comma separated")->required();
  leaf(family_c, "family curve", [&] {
    params["n"] = fam_n;
    params["v"] = fam_v;
    std::vector<Rat> v;
    for (const auto& s : split_csv(fam_v)) v.push_back(parse_rat(s));
    const PlaneCurve F = family_curve(fam_n, v);
    Outcome o;
    json basis = json::array();
    for (const auto& m : basis_An(fam_n)) basis.push_back(Poly::monomial(p4_ring(), m).to_string());
    o.result = {{"F", F.poly().to_string()},
                {"degree", F.degree()},
                {"height", F.height().get_str()},
                {"basis", basis},
                {"dim_An", dim_An(fam_n)}};
    o.provenance = {"plane curve family F_n"};
    return o;
  });

  // containing-model
  std::string cm_text;
  auto* cm = app.add_subcommand("containing-model", "non-degenerate ico model containing tau(V(F))");
  cm->add_option("-F", cm_text, "homogeneous F in x, y, z, or @file")->required();
  leaf(cm, "containing-model", [&] {
    params["F"] = cm_text;
    const PlaneCurve F(poly_parse(read_arg(cm_text), p2_ring()));
    Outcome o;
    const TauReport tau = check_tau(F);
    if (tau.verdict == TauVerdict::Fails) {
      o.result = {{"verdict", "fails"}, {"stage", stage_name(tau.stage)}, {"witness", tau.witness}};
      o.code = 1;
      o.provenance = {"criterion (tau)"};
      return o;
    }
    const ContainingModel m = containing_model(F);
    const IcoModel model = m.model();
    o.result = {{"f_tilde", m.f_tilde.to_string()},
                {"degree", 2 * m.r},
                {"degree_bound", m.degree_bound},
                {"g", strings(std::vector<Poly>(m.g.begin(), m.g.end()))},
                {"nu", nu_f(model, g.factor()).get_str()},
                {"degenerate", is_degenerate(model)},
                {"in_ideal", m.in_ideal},
                {"positive_at_e", m.positive_at_e},
                {"log10_height", m.log10_height.render(30)},
                {"log10_height_bound", m.log10_height_bound.decomposition()},
                {"within_degree_bound", m.within_degree_bound()},
                {"within_height_bound", m.within_height_bound()}};
    o.code = m.in_ideal && m.positive_at_e && !is_degenerate(model) ? 0 : 1;
    o.provenance = {"containing model construction"};
    return o;
  });

  // bound
  std::string b_nu = "1", b_d = "1", b_absF = "1", b_a, b_dx = "1", b_hX = "0";
  auto* bound = app.add_subcommand("bound", "height bound certificates");
  bound->require_subcommand(1);
  auto* thmE = bound->add_subcommand("thmE", "h(x) <= c nu^24");
  thmE->add_option("--nu", b_nu)->required();
  leaf(thmE, "bound thmE", [&] {
    params["nu"] = b_nu;
    return Outcome{certificate(bound_thmE(parse_int(b_nu))), 0, {"Theorem E"}};
  });
  auto* corD = bound->add_subcommand("corD", "plane curves satisfying (tau)");
  corD->add_option("-d", b_d)->required();
  corD->add_option("--absF", b_absF)->required();
  leaf(corD, "bound corD", [&] {
    params["d"] = b_d;
    params["absF"] = b_absF;
    return Outcome{certificate(bound_corD(parse_int(b_d), parse_int(b_absF))), 0, {"Corollary D"}};
  });
  auto* corF = bound->add_subcommand("corF", "generalized Fermat equations");
  corF->add_option("-a", b_a, "a0,..,a4")->required();
  leaf(corF, "bound corF", [&] {
    params["a"] = b_a;
    std::vector<Int> a;
    for (const auto& s : split_csv(b_a)) a.push_back(parse_int(s));
    return Outcome{certificate(bound_corF(a, g.factor())), 0, {"Corollary F"}};
  });
  auto* thmC = bound->add_subcommand("thmC", "curves in a non-degenerate model");
  thmC->add_option("--dx", b_dx)->required();
  thmC->add_option("--nu", b_nu)->required();
  thmC->add_option("--hX", b_hX, "a/b, decimal or 10^E")->required();
  leaf(thmC, "bound thmC", [&] {
    params["dx"] = b_dx;
    params["nu"] = b_nu;
    params["hX"] = b_hX;
    return Outcome{certificate(bound_thmC(parse_int(b_dx), parse_int(b_nu), b_hX)), 0, {"Theorem C"}};
  });

  // fermat
  std::string fa;
  unsigned fn = 1;
  long fB = 1;
  unsigned threads = 0;
  bool complete = false;
  std::string fx;
  auto* fermat = app.add_subcommand("fermat", "generalized Fermat equations on the surface");
  fermat->require_subcommand(1);
  auto* fscan = fermat->add_subcommand("scan", "surface points, optionally on an instance");
  fscan->add_option("-a", fa, "a0,..,a4 (omit for the bare surface)");
  fscan->add_option("-n", fn)->check(CLI::PositiveNumber);
  fscan->add_option("-B", fB)->required()->check(CLI::Range(1L, 100000L));
  fscan->add_option("--threads", threads);
  fscan->add_flag("--complete", complete, "sweep the singular case over the complete range");
  leaf(fscan, "fermat scan", [&] {
    params["B"] = fB;
    params["threads"] = threads;
    params["complete"] = complete;
    const ScanOptions opts{threads, complete};
    ScanReport r;
    if (fa.empty()) {
      r = scan_surface(fB, opts);
    } else {
      params["a"] = fa;
      params["n"] = fn;
      r = scan_instance(parse_instance(fa, fn), fB, opts);
    }
    return Outcome{scan_json(r), r.nontrivial.empty() ? 0 : 1, {"Fermat problem on the surface"}};
  });
  auto* fbound = fermat->add_subcommand("bound", "height bound for an instance");
  fbound->add_option("-a", fa, "a0,..,a4")->required();
  leaf(fbound, "fermat bound", [&] {
    params["a"] = fa;
    const FermatInstance inst = parse_instance(fa, 1);
    const std::vector<Int> a(inst.a.begin(), inst.a.end());
    return Outcome{certificate(bound_corF(a, g.factor())), 0, {"Corollary F"}};
  });
  auto* funit = fermat->add_subcommand("unit-reduce", "S-unit equation of a point");
  funit->add_option("-a", fa, "a0,..,a4")->required();
  funit->add_option("-n", fn)->required()->check(CLI::PositiveNumber);
  funit->add_option("-x", fx, "x0,..,x4")->required();
  leaf(funit, "fermat unit-reduce", [&] {
    params["a"] = fa;
    params["n"] = fn;
    params["x"] = fx;
    const UnitEquation eq = unit_reduce(parse_instance(fa, fn), ProjPoint::parse(fx), g.factor());
    json u = json::array(), S = json::array(), subsets = json::array(), idx = json::array();
    for (const auto& v : eq.u) u.push_back(v.get_str());
    for (const auto& p : eq.S) S.push_back(p.get_str());
    for (const auto& s : eq.vanishing_subsets) subsets.push_back(s);
    for (auto i : eq.indices) idx.push_back(i);
    return Outcome{{{"k", eq.k},
                    {"u", u},
                    {"S", S},
                    {"degenerate", eq.degenerate},
                    {"vanishing_subsets", subsets},
                    {"indices", idx},
                    {"on_surface", eq.on_surface}},
                   0,
                   {"generalized unit equation"}};
  });
  auto* fz = fermat->add_subcommand("z-scan", "non-trivial surface points in Z");
  fz->add_option("-B", fB)->required()->check(CLI::Range(1L, 100000L));
  fz->add_option("--threads", threads);
  leaf(fz, "fermat z-scan", [&] {
    params["B"] = fB;
    const ScanReport r = z_triviality_scan(fB, {threads, false});
    return Outcome{scan_json(r), r.points.empty() ? 0 : 1, {"Z-locus triviality"}};
  });

  // groebner
  std::string gens, ring_name = "auto";
  auto* gb = app.add_subcommand("groebner", "reduced grevlex Groebner basis and Hilbert data");
  gb->add_option("-g", gens, "generators, comma separated, or @file")->required();
  gb->add_option("--ring", ring_name)->check(CLI::IsMember({"auto", "p2", "p4"}))->capture_default_str();
  leaf(gb, "groebner", [&] {
    params["g"] = gens;
    params["ring"] = ring_name;
    const std::string text = read_arg(gens);
    const bool p4 = ring_name == "p4" || (ring_name == "auto" && text.find("x0") != std::string::npos) ||
                    (ring_name == "auto" && text.find("x4") != std::string::npos);
    const Ideal I(p4 ? p4_ring() : p2_ring(), parse_polys(text, p4 ? p4_ring() : p2_ring()));
    Outcome o;
    o.result = {{"ring", p4 ? "p4" : "p2"}, {"basis", strings(I.basis())}};
    if (I.is_homogeneous()) {
      const HilbertData h = hilbert_data(I);
      json hp = json::array();
      for (const auto& c : h.hilbert_polynomial) hp.push_back(c.get_str());
      o.result["dimension"] = h.dimension;
      o.result["degree"] = h.degree.get_str();
      o.result["hilbert_polynomial"] = hp;
    }
    return o;
  });

  // genus
  std::string genus_f;
  auto* genus = app.add_subcommand("genus", "dimension, degree and arithmetic genus of an ico model");
  genus->add_option("-f", genus_f, "polynomials in x0..x4, comma separated, or @file")->required();
  leaf(genus, "genus", [&] {
    params["f"] = genus_f;
    const IcoModel model(parse_polys(genus_f, p4_ring()));
    const Ideal I = model_ideal(model);
    const auto [dim, deg] = dim_degree(I);
    Outcome o;
    o.result = {{"dimension", dim}, {"degree", deg.get_str()}, {"degenerate", is_degenerate(model)}};
    if (dim == 1) o.result["arithmetic_genus"] = arithmetic_genus(I).get_str();
    if (model.size() == 1 && dim == 1) {
      const unsigned n = static_cast<unsigned>(model.polys()[0].degree());
      o.result["general_genus"] = genus_general(n).get_str();
    }
    o.provenance = {"genus of ico models"};
    return o;
  });

  // suite
  std::string suite_name;
  auto* suite = app.add_subcommand("suite", "run an acceptance bundle");
  suite->add_option("name", suite_name)
      ->required()
      ->check(CLI::IsMember({"identities", "dimensions", "genus", "ttau", "fermat-smoke"}));
  leaf(suite, "suite", [&] {
    params["name"] = suite_name;
    if (suite_name == "identities") return suite_identities(g);
    if (suite_name == "dimensions") return suite_dimensions();
    if (suite_name == "genus") return suite_genus(g);
    if (suite_name == "ttau") return suite_ttau();
    return suite_fermat_smoke(g);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  set_default_gb_steps(g.gb_steps);
  params["gb_steps"] = g.gb_steps;
  params["factor_budget"] = g.factor_budget;
  params["samples"] = g.samples;
  params["seed"] = g.seed;

  json report = {{"schema", "icotk-report/1"}, {"version", ICOTK_VERSION}, {"command", command}};
  int code = 0;
  try {
    Outcome o = action();
    report["result"] = std::move(o.result);
    report["provenance"] = o.provenance;
    code = o.code;
  } catch (const BudgetExceeded& e) {
    report["error"] = {{"kind", "budget"}, {"message", e.what()}};
    code = 3;
  } catch (const UnfactoredInput& e) {
    report["error"] = {{"kind", "budget"}, {"message", e.what()}};
    code = 3;
  } catch (const ParseError& e) {
    report["error"] = {{"kind", "parse"}, {"message", e.what()}, {"offset", e.offset()}};
    code = 2;
  } catch (const std::exception& e) {
    report["error"] = {{"kind", "input"}, {"message", e.what()}};
    code = 2;
  }
  report["params"] = params;
  report["exit_code"] = code;
  report["millis"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::cout << report.dump(2) << '\n';
  return code;
}
