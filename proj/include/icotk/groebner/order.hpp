#pragma once

#include <bitset>
#include <cstddef>
#include <string>
#include <vector>

#include "icotk/algebra/ring.hpp"

namespace icotk {

enum class OrderKind { Grevlex, Lex, BlockElimination };

/// Monomial order. Block elimination compares the first-block variables by
/// grevlex first and breaks ties with grevlex on the remaining variables, so
/// any polynomial whose leading monomial is free of the block is free of it.
class MonomialOrder {
 public:
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::Grevlex, {}); }
  static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex, {}); }
  static MonomialOrder block(const std::vector<std::size_t>& first_block);

  OrderKind kind() const { return kind_; }
  const std::bitset<kMaxVars>& first_block() const { return block_; }
  /// Negative, zero or positive as a < b, a == b, a > b on the first n variables.
  int compare(const Monomial& a, const Monomial& b, std::size_t n) const;
  /// Stable text tag, used as a cache key: "grevlex", "lex", "block:0,1,2".
  std::string tag() const;

  bool operator==(const MonomialOrder& o) const { return kind_ == o.kind_ && block_ == o.block_; }

 private:
  MonomialOrder(OrderKind kind, std::bitset<kMaxVars> block) : kind_(kind), block_(block) {}

  OrderKind kind_;
  std::bitset<kMaxVars> block_;
};

}  // namespace icotk
