#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "icotk/algebra/integer.hpp"
#include "icotk/ico/models.hpp"
#include "icotk/ico/proj_point.hpp"

namespace icotk {

/// a_0 x_0^n + ... + a_4 x_4^n = 0 on the surface, all a_i nonzero.
struct FermatInstance {
  FermatInstance(std::array<Int, 5> coeffs, unsigned exponent);

  std::array<Int, 5> a;
  unsigned n;

  /// sum a_i x_i^n.
  Int evaluate(const ProjPoint& x) const;
};

/// The single-polynomial model sum a_i x_i^n.
IcoModel instance_model(const FermatInstance& inst);
/// rad(prod a_i).
Int instance_nu(const FermatInstance& inst, const FactorBudget& budget = {});

struct ScanReport {
  long bound = 0;
  std::string strategy;
  /// Sorted, each a primitive point of the surface (up to sign).
  std::vector<ProjPoint> points;
  std::vector<ProjPoint> trivial;
  std::vector<ProjPoint> nontrivial;
  double millis = 0;
};

struct ScanOptions {
  /// Worker count; 0 means ICOTK_THREADS or the hardware concurrency.
  unsigned threads = 0;
  /// Sweep the singular case over |P| <= max(2B^2, (B+1)^2), which is
  /// complete; the default [-2B^2, 2B^2] misses a few points for B <= 2.
  bool complete = false;
};

/// Primitive surface points whose three smallest |x_i| are <= B, closed under
/// permutation. Enumerates the three small coordinates and solves for the
/// remaining pair through P = x3 + x4, Q = x3 x4.
ScanReport scan_surface(long B, const ScanOptions& opts = {});
/// scan_surface filtered by the instance equation.
ScanReport scan_instance(const FermatInstance& inst, long B, const ScanOptions& opts = {});

struct UnitEquation {
  /// Number of unknowns: one less than the count of nonzero coordinates.
  unsigned k = 0;
  std::vector<Rat> u;
  std::vector<Int> S;
  bool degenerate = false;
  /// Nonempty proper index subsets of u with zero sum.
  std::vector<std::vector<std::size_t>> vanishing_subsets;
  /// Coordinates of x used for u_0..u_{k-1}, then the reference coordinate.
  std::vector<std::size_t> indices;
  /// x lies on sigma_2 = sigma_4 = 0.
  bool on_surface = true;
};

/// u_i = -(a_i / a_k)(x_i / x_k)^n over the nonzero coordinates of x, the
/// last nonzero one serving as x_k. DomainError if x is off X_n or has fewer
/// than two nonzero coordinates.
UnitEquation unit_reduce(const FermatInstance& inst, const ProjPoint& x, const FactorBudget& budget = {});

/// Nonempty proper subsets of u summing to zero (exhaustive).
std::vector<std::vector<std::size_t>> vanishing_subsets(const std::vector<Rat>& u);

/// Every coordinate is 0 or equals +- another coordinate. Checked against
/// z_member_scheme; a disagreement throws.
bool z_member(const ProjPoint& x);
bool z_member_ratio(const std::vector<Int>& x);
/// For all j there is i != j with x_i^2 x_j - x_j^3 = 0.
bool z_member_scheme(const std::vector<Int>& x);

/// Non-trivial points of the surface in Z with three smallest |x_i| <= B.
ScanReport z_triviality_scan(long B, const ScanOptions& opts = {});

/// All (u_0..u_{k-1}) of S-units, exponents in [-E, E], with sum 1. A bounded
/// search: complete only inside the box. BudgetExceeded past `max_candidates`.
std::vector<std::vector<Rat>> sunit_bounded(const std::vector<Int>& S, unsigned k, unsigned E,
                                            std::uint64_t max_candidates = 50'000'000);

}  // namespace icotk
