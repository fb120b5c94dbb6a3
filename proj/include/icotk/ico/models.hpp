#pragma once

#include <vector>

#include "icotk/algebra/poly.hpp"
#include "icotk/groebner/groebner.hpp"

namespace icotk {

/// Ico model X_f: the curve cut out of the surface by homogeneous f_j in x0..x4.
///
/// Inputs are normalized to primitive integer form on construction; the
/// diagonal a_ij = coefficient of x_i^{n_j} in f_j is cached.
class IcoModel {
 public:
  explicit IcoModel(std::vector<Poly> fs);

  const std::vector<Poly>& polys() const { return f_; }
  std::size_t size() const { return f_.size(); }
  /// 5 x m matrix, row i = variable x_i, column j = f_j.
  const std::vector<std::vector<Int>>& diagonal() const { return diag_; }

 private:
  std::vector<Poly> f_;
  std::vector<std::vector<Int>> diag_;
};

/// The diagonal recomputed by evaluating each f_j at e_{i+1}.
std::vector<std::vector<Int>> diagonal_by_evaluation(const IcoModel& model);

/// Some row of the diagonal matrix is identically zero.
bool is_degenerate(const IcoModel& model);
/// Some e_i is a common zero of all f_j.
bool meets_degeneracy_locus(const IcoModel& model);
/// rad of the product of the nonzero diagonal coefficients (1 if none).
Int nu_f(const IcoModel& model, const FactorBudget& budget = {});
/// (sigma_2, sigma_4, f_1, ..., f_m).
Ideal model_ideal(const IcoModel& model);
/// The projective dimension of X_f is 1.
bool is_curve(const IcoModel& model, GbBudget budget = {});

/// r = dim A_n for A = Q[x0..x4]/(sigma_2, sigma_4).
unsigned dim_An(unsigned n);
/// Monomial basis s_1..s_r of A_n with s_i = x_{i-1}^n for i <= 5.
std::vector<Monomial> basis_An(unsigned n, GbBudget budget = {});

/// The one-polynomial model sum v_i s_i (primitivized).
IcoModel general_model(unsigned n, const std::vector<Rat>& v);
/// (2n+1)^2, cross-checked against the inclusion-exclusion formula.
Int genus_general(unsigned n);
/// sum_{m=1}^{3} (-1)^{m+1} sum_{|S|=m} phi(-sum_{i in S} d_i), phi(z) = (z+1)(z+2)(z+3)(z+4)/24.
Int complete_intersection_genus(const std::vector<long>& degrees);

}  // namespace icotk
