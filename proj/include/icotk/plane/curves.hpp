#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "icotk/algebra/poly.hpp"
#include "icotk/groebner/groebner.hpp"
#include "icotk/heights/heights.hpp"
#include "icotk/ico/models.hpp"

namespace icotk {

/// Plane curve V(F) for primitive homogeneous F in x, y, z of degree >= 1.
class PlaneCurve {
 public:
  explicit PlaneCurve(const Poly& F);
  static PlaneCurve parse(const std::string& text);

  const Poly& poly() const { return F_; }
  unsigned degree() const { return static_cast<unsigned>(F_.degree()); }
  /// |F| = max |coefficient|.
  const Int& height() const { return abs_; }

 private:
  Poly F_;
  Int abs_;
};

/// F(rho_0, rho_1, rho_2) in x0..x4, primitive; DomainError if it vanishes.
Poly pullback_rho(const Poly& F);
/// f(tau_0, ..., tau_4) in x, y, z, primitive; DomainError if it vanishes.
Poly pullback_tau(const Poly& f);

enum class TauVerdict { Satisfies, Fails };
enum class TauStage { None, CurveMeetsCtauOffTtau, ImageContainsE };
std::string stage_name(TauStage stage);

/// Homogeneous ideal J of the closure of tau(X \ C_tau) in x0..x4.
///
/// J_e is the kernel of Q[x0..x4]_e -> Q[x,y,z]_{12e} / (F_red), g -> g(tau),
/// where F_red is the squarefree part of F with its C_tau components removed.
struct ImageData {
  /// Minimal homogeneous generators of J in degrees <= through_degree.
  std::vector<Poly> generators;
  unsigned through_degree = 0;
  /// Smallest degree of an element of J not vanishing at e_i, or -1 if none
  /// up to degree_limit.
  std::array<int, 5> separating_degree{-1, -1, -1, -1, -1};
  /// 12 deg F_red: past this, e_i is in V(J) if no element separates it.
  unsigned degree_limit = 0;
  /// X \ C_tau is empty (every component of X lies in C_tau).
  bool empty = false;

  bool all_separated() const;
  Ideal ideal() const;
};

/// Computes J through degree max(min_degree, largest separating degree).
/// Stops at degree_limit when some e_i is never separated, or earlier at
/// max_degree when that is nonzero (then unseparated e_i are undecided).
ImageData image_data(const PlaneCurve& F, unsigned min_degree = 4, GbBudget budget = {}, unsigned max_degree = 0);
Ideal image_ideal(const PlaneCurve& F, GbBudget budget = {});

struct TauReport {
  TauVerdict verdict = TauVerdict::Satisfies;
  TauStage stage = TauStage::None;
  /// 0-based index of e_i for ImageContainsE, else -1.
  int witness_e = -1;
  std::string witness;
  /// Image ideal generators; empty when stage 1 or 2 decided.
  std::vector<Poly> image_generators;
  std::array<int, 5> separating_degree{-1, -1, -1, -1, -1};
  double millis = 0;
};

/// Decides criterion (tau): closure of tau(X \ T_tau) contains no e_i.
///
/// X \ T_tau splits into X \ C_tau and X cap (C_tau \ T_tau), and tau maps the
/// latter into {e_i}. So (tau) holds iff X meets C_tau only inside T_tau and
/// no e_i lies in the closure of tau(X \ C_tau). Stages:
///  1. a component of C_tau divides F;
///  2. on each line or conic of C_tau, parametrized over Q, the roots of F
///     must be common roots of all tau_k;
///  3. each e_i must be separated by an element of J (image_data).
TauReport check_tau(const PlaneCurve& F, GbBudget budget = {});

/// True if the single polynomial f has all five diagonal coefficients nonzero,
/// which guarantees (tau) for V(tau^* f). False means no conclusion.
bool tau_witness(const IcoModel& f);

struct ContainingModel {
  Poly f_tilde{p4_ring()};
  /// g_i with g_i(e_i) != 0, one per e_i.
  std::array<Poly, 5> g{Poly(p4_ring()), Poly(p4_ring()), Poly(p4_ring()), Poly(p4_ring()), Poly(p4_ring())};
  unsigned r = 0;
  bool in_ideal = false;        // normal_form(f~, J) = 0
  bool positive_at_e = false;   // f~(e_i) > 0 for all i
  unsigned degree_bound = 0;    // 128 d
  LogBound log10_height;        // log10 |f~|
  LogBound log10_height_bound;  // log10(u |F|^v)
  bool within_degree_bound() const { return 2 * r <= degree_bound; }
  bool within_height_bound() const { return LogBound::compare(log10_height, log10_height_bound) <= 0; }
  IcoModel model() const { return IcoModel({f_tilde}); }
};

/// f~ = sum (x_i^(r - d_i) g_i)^2 for F satisfying (tau). DomainError otherwise.
ContainingModel containing_model(const PlaneCurve& F, GbBudget budget = {});

/// F_v = tau^*(sum v_i s_i) for the basis s of A_n.
PlaneCurve family_curve(unsigned n, const std::vector<Rat>& v);

namespace detail {

/// Kernel of Q[X_0..X_{m-1}]_e -> Q[x,y,z]/(F), X_k -> maps[k], for one degree e.
/// Exposed for cross-checking against elimination. maps must share a degree.
std::vector<Poly> image_kernel(const Poly& F, const std::vector<Poly>& maps, const RingPtr& target, unsigned e,
                               GbBudget budget = {});

/// Lines and conics of C_tau as rational parametrizations P^1 -> P^2 in (u, w).
std::vector<std::array<Poly, 3>> ctau_parametrizations();

}  // namespace detail

}  // namespace icotk
