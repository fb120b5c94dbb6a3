#pragma once

#include <array>
#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

#include "icotk/algebra/poly.hpp"
#include "icotk/groebner/groebner.hpp"
#include "icotk/ico/proj_point.hpp"

namespace icotk {

/// The fixed polynomials of the icosahedron surface: sigma_2, sigma_4 in
/// x0..x4, the cubics t_j and the maps tau (degree 12), rho (degree 8).
///
/// tau and rho are assembled from t_j and r_i = prod_{j != i} x_j when the
/// singleton is first used. lambda = rho_0(tau) / x is expanded lazily.
class FixedGeometry {
 public:
  static const FixedGeometry& get();

  const RingPtr& p2() const { return p2_; }
  const RingPtr& p4() const { return p4_; }
  const Poly& sigma2() const { return sigma2_; }
  const Poly& sigma4() const { return sigma4_; }
  const std::array<Poly, 4>& t() const { return t_; }
  const std::array<Poly, 5>& tau() const { return tau_; }
  const std::array<Poly, 5>& r() const { return r_; }
  const std::array<Poly, 3>& rho() const { return rho_; }
  /// The ideal (sigma_2, sigma_4) with its cached bases.
  const Ideal& surface_ideal() const { return surface_; }

  /// lambda, degree 95. Expanded on first call (a few seconds).
  const Poly& lambda() const;

  /// Components of C_tau = V(lambda): lambda = sign * prod factor^exponent.
  /// The list is checked against the expanded lambda by lambda_factorization_holds().
  struct LambdaFactor {
    Poly factor;
    unsigned exponent;
  };
  const std::vector<LambdaFactor>& lambda_factors() const { return factors_; }
  int lambda_sign() const { return -1; }
  bool lambda_factorization_holds() const;
  /// lambda(p) through the factor list; no expansion needed.
  Rat lambda_at(std::span<const Rat> p) const;

  /// e_1..e_5 as index 0..4.
  const std::array<ProjPoint, 5>& e() const { return e_; }

 private:
  FixedGeometry();

  RingPtr p2_, p4_;
  Poly sigma2_, sigma4_;
  std::array<Poly, 4> t_;
  std::array<Poly, 5> tau_;
  std::array<Poly, 5> r_;
  std::array<Poly, 3> rho_;
  Ideal surface_;
  std::vector<LambdaFactor> factors_;
  std::array<ProjPoint, 5> e_;
  mutable std::once_flag lambda_once_;
  mutable Poly lambda_;
};

std::array<Poly, 5> tau_map();
std::array<Poly, 3> rho_map();

/// tau(p) normalized. Throws DomainError("base point") if every tau_i vanishes.
ProjPoint tau_point(const ProjPoint& p);
/// rho(q) normalized. Throws DomainError("not on M") off the surface and
/// DomainError("rho-base point") if every rho_i vanishes.
ProjPoint rho_point(const ProjPoint& q);
bool on_surface(const ProjPoint& q);

enum class IdentityMode { Symbolic, Sampled };

struct IdentityCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct IdentityReport {
  IdentityMode mode;
  unsigned samples = 0;
  std::uint64_t seed = 0;
  std::vector<IdentityCheck> checks;
  bool all_passed() const;
};

/// Checks (a) sigma_2(tau) = sigma_4(tau) = 0, (b) rho(tau) = lambda * (x, y, z),
/// (c) tau_i(rho) x_j - tau_j(rho) x_i in (sigma_2, sigma_4).
IdentityReport verify_identities(IdentityMode mode, unsigned samples = 25, std::uint64_t seed = 1,
                                 GbBudget budget = {});

/// Element a + b t of Q[t]/(t^2 - t - 1).
struct Golden {
  Rat a = 0, b = 0;
  Golden operator+(const Golden& o) const { return {a + o.a, b + o.b}; }
  Golden operator*(const Golden& o) const { return {a * o.a + b * o.b, a * o.b + b * o.a + b * o.b}; }
  bool is_zero() const { return a == 0 && b == 0; }
};

Golden evaluate_golden(const Poly& p, std::span<const Golden> point);

struct TTau {
  std::vector<ProjPoint> rational;
  /// Representative (1, 1, t) of the Galois orbit, t^2 = t + 1.
  std::array<Golden, 3> quadratic;
};

TTau ttau_points();

/// Deterministic sample of P^2 points with coordinates in [-bound, bound]
/// and lambda != 0.
std::vector<ProjPoint> sample_plane_points(unsigned count, std::uint64_t seed, long bound = 1000);

}  // namespace icotk
