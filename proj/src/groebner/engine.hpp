#pragma once

// Internal fraction-free representation shared by the Gröbner sources.

#include <cstdint>
#include <vector>

#include "icotk/algebra/poly.hpp"
#include "icotk/groebner/order.hpp"

namespace icotk::detail {

struct GTerm {
  Monomial m;
  Int c;
};

/// Integer polynomial, terms sorted by decreasing order.
using GPoly = std::vector<GTerm>;

class GbContext {
 public:
  GbContext(const MonomialOrder& ord, std::size_t nvars, std::uint64_t limit) : ord_(ord), n_(nvars), limit_(limit) {}

  int cmp(const Monomial& a, const Monomial& b) const { return ord_.compare(a, b, n_); }
  void step();
  std::uint64_t used() const { return used_; }
  std::size_t nvars() const { return n_; }
  const MonomialOrder& order() const { return ord_; }

 private:
  const MonomialOrder& ord_;
  std::size_t n_;
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

std::uint64_t effective_limit(std::uint64_t requested);

inline std::uint32_t support_mask(const Monomial& m, std::size_t n) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (m[i]) mask |= 1u << i;
  return mask;
}

/// Primitive integer form of p sorted for ctx; returns the factor c with p = c * result.
GPoly to_gpoly(const Poly& p, const GbContext& ctx, Rat* content = nullptr);
Poly from_gpoly(const GPoly& p, const RingPtr& ring);

/// A reducer: polynomial plus cached leading data.
struct Reducer {
  const GPoly* poly;
  Monomial lt;
  std::uint32_t mask;
};

/// Full reduction of p by the reducers. The returned polynomial equals
/// scale * (true remainder); `scale` may be null when only zero-ness or the
/// remainder up to a constant matters.
GPoly reduce_full(GPoly p, const std::vector<Reducer>& reducers, GbContext& ctx, Rat* scale = nullptr);

/// Reduced Gröbner basis in fraction-free form.
std::vector<GPoly> buchberger(std::vector<GPoly> gens, GbContext& ctx);

GPoly s_polynomial(const GPoly& f, const GPoly& g, GbContext& ctx);

}  // namespace icotk::detail
