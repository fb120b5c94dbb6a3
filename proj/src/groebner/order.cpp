#include "icotk/groebner/order.hpp"

#include "icotk/errors.hpp"

namespace icotk {
namespace {

// grevlex restricted to the variables i < n with mask[i] == want.
int masked_grevlex(const Monomial& a, const Monomial& b, std::size_t n, const std::bitset<kMaxVars>& mask, bool want) {
  long da = 0, db = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask[i] != want) continue;
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = n; i-- > 0;) {
    if (mask[i] != want || a[i] == b[i]) continue;
    return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

MonomialOrder MonomialOrder::block(const std::vector<std::size_t>& first_block) {
  std::bitset<kMaxVars> b;
  for (auto v : first_block) {
    if (v >= kMaxVars) throw DomainError("block order: variable index out of range");
    b.set(v);
  }
  return MonomialOrder(OrderKind::BlockElimination, b);
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b, std::size_t n) const {
  switch (kind_) {
    case OrderKind::Grevlex:
      return grevlex_compare(a, b, n);
    case OrderKind::Lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case OrderKind::BlockElimination: {
      const int c = masked_grevlex(a, b, n, block_, true);
      return c != 0 ? c : masked_grevlex(a, b, n, block_, false);
    }
  }
  return 0;
}

std::string MonomialOrder::tag() const {
  switch (kind_) {
    case OrderKind::Grevlex:
      return "grevlex";
    case OrderKind::Lex:
      return "lex";
    case OrderKind::BlockElimination: {
      std::string s = "block:";
      bool first = true;
      for (std::size_t i = 0; i < kMaxVars; ++i) {
        if (!block_[i]) continue;
        if (!first) s += ',';
        s += std::to_string(i);
        first = false;
      }
      return s;
    }
  }
  return "?";
}

}  // namespace icotk
