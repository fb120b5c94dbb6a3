#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "icotk/algebra/integer.hpp"
#include "icotk/ico/proj_point.hpp"

namespace icotk {

/// log10(B) = E + sum_k c_k log10(m_k), held exactly.
///
/// Bounds such as 10^(10^12) are never materialized; products of bounds add
/// decompositions and powers scale them. Terms are stored as given (merged by
/// m, powers of ten folded into E) so echoes stay readable; comparisons go
/// through a canonical prime decomposition.
class LogBound {
 public:
  LogBound() = default;
  static LogBound constant(const Rat& e);
  /// c * log10(m), m >= 1.
  static LogBound log10_of(const Int& m, const Rat& c = 1);

  const Rat& exponent() const { return e_; }
  const std::map<Int, Rat>& terms() const { return terms_; }

  LogBound operator+(const LogBound& o) const;
  LogBound operator-(const LogBound& o) const;
  LogBound operator*(const Rat& c) const;
  bool operator==(const LogBound& o) const { return compare(*this, o) == 0; }

  /// Sign of a - b. Exact whenever every m_k factors under the trial budget.
  static int compare(const LogBound& a, const LogBound& b);

  /// "E + c*log10(m) + ..." with exact numbers.
  std::string decomposition() const;
  /// Decimal value rounded upward with `digits` digits after the point; an
  /// exact integer when there are no log terms and E is integral.
  std::string render(unsigned digits = 50) const;
  /// Value rounded to the nearest double (for display only).
  double approx() const;

 private:
  Rat e_ = 0;
  std::map<Int, Rat> terms_;
};

/// log10(A + B) <= log10(max(A, B)) + log10(2); a missing argument is 0.
LogBound sum_bound(const std::optional<LogBound>& a, const std::optional<LogBound>& b);

/// h(P) = log max |x_i| of the primitive representative.
struct PointHeight {
  Int max_coord;
  bool is_zero() const { return max_coord == 1; }
  /// Natural log rounded to nearest, `digits` digits after the point.
  std::string natural_log(unsigned digits = 30) const;
};

PointHeight point_height(const ProjPoint& p);

enum class BoundTag { ThmC, ThmE, CorD, CorF, CorPullback };
std::string tag_name(BoundTag tag);

struct HeightCertificate {
  BoundTag tag;
  /// Inputs and derived constants, echoed for re-derivation.
  std::vector<std::pair<std::string, std::string>> inputs;
  LogBound bound;
  /// What the bound bounds (always a natural-log quantity; the bound itself is in log10).
  std::string unit;
};

/// h(x) <= c nu^24, c = 10^(10^12).
HeightCertificate bound_thmE(const Int& nu);
/// Same shape for the plane-family statement, nu = nu_X.
HeightCertificate bound_corPullback(const Int& nu);
/// h(x) <= mu |F|^kappa, kappa = 8^8 d^2, mu = 8^(kappa^2 d).
HeightCertificate bound_corD(const Int& d, const Int& absF);
/// log|x_i| <= kappa nu^24 with kappa = 10^(10^12), nu = rad(prod a_i).
HeightCertificate bound_corF(const std::vector<Int>& a, const FactorBudget& budget = {});
/// h(x) <= c d_X nu^24 + h(X).
HeightCertificate bound_thmC(const Int& dX, const Int& nu, const std::string& hX);

/// Parses a nonnegative height value: "a/b", a decimal "12.5", or "10^E".
/// Returns nullopt for zero; otherwise log10 of the value.
std::optional<LogBound> parse_height_value(const std::string& text);

/// log10 of u |F|^v with u = 3^((86d)^5), v = (258d)^2.
LogBound containing_model_height_bound(const Int& d, const Int& absF);

}  // namespace icotk
