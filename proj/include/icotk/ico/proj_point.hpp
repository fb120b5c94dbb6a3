#pragma once

#include <span>
#include <string>
#include <vector>

#include "icotk/algebra/integer.hpp"

namespace icotk {

/// Rational point of P^m as a primitive integer tuple with canonical sign
/// (first nonzero coordinate positive).
class ProjPoint {
 public:
  ProjPoint() = default;
  /// Normalizes `coords`; throws DomainError if all are zero.
  explicit ProjPoint(std::vector<Int> coords);
  static ProjPoint from_rationals(std::span<const Rat> coords);
  static ProjPoint parse(const std::string& csv);

  std::size_t size() const { return c_.size(); }
  const Int& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Int>& coords() const { return c_; }
  std::vector<Rat> rationals() const { return {c_.begin(), c_.end()}; }

  /// Max absolute coordinate; the Weil height is its natural log.
  Int max_abs() const;
  /// All coordinates in {-1, 0, 1}.
  bool is_trivial() const;

  std::string to_string() const;
  bool operator==(const ProjPoint& o) const { return c_ == o.c_; }
  bool operator!=(const ProjPoint& o) const { return c_ != o.c_; }
  bool operator<(const ProjPoint& o) const { return c_ < o.c_; }

 private:
  std::vector<Int> c_;
};

}  // namespace icotk
