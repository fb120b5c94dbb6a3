#include "engine.hpp"

#include <algorithm>
#include <atomic>

#include "icotk/errors.hpp"
#include "icotk/groebner/groebner.hpp"

namespace icotk {
namespace {
std::atomic<std::uint64_t> g_default_steps{10'000'000};
}

std::uint64_t default_gb_steps() { return g_default_steps.load(); }
void set_default_gb_steps(std::uint64_t steps) { g_default_steps.store(steps == 0 ? 10'000'000 : steps); }

namespace detail {

std::uint64_t effective_limit(std::uint64_t requested) { return requested ? requested : default_gb_steps(); }

void GbContext::step() {
  if (++used_ > limit_)
    throw BudgetExceeded("computation limit: Groebner reduction exceeded " + std::to_string(limit_) + " steps");
}

GPoly to_gpoly(const Poly& p, const GbContext& ctx, Rat* content) {
  GPoly out;
  if (p.is_zero()) {
    if (content) *content = 0;
    return out;
  }
  auto [c, q] = content_primitive(p);
  if (content) *content = c;
  out.reserve(q.size());
  for (const auto& t : q.terms()) out.push_back({t.mono, t.coeff.get_num()});
  if (ctx.order().kind() != OrderKind::Grevlex)
    std::sort(out.begin(), out.end(), [&](const GTerm& a, const GTerm& b) { return ctx.cmp(a.m, b.m) > 0; });
  return out;
}

Poly from_gpoly(const GPoly& p, const RingPtr& ring) {
  std::vector<Poly::Term> ts;
  ts.reserve(p.size());
  for (const auto& t : p) ts.push_back({t.m, Rat(t.c)});
  return Poly::from_terms(ring, std::move(ts));
}

namespace {

Int content_of(const GPoly& a, std::size_t from, const GPoly& b) {
  Int g = 0;
  for (std::size_t i = from; i < a.size(); ++i) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a[i].c.get_mpz_t());
    if (g == 1) return g;
  }
  for (const auto& t : b) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) return g;
  }
  return g;
}

void divide_all(GPoly& p, std::size_t from, const Int& g) {
  for (std::size_t i = from; i < p.size(); ++i) mpz_divexact(p[i].c.get_mpz_t(), p[i].c.get_mpz_t(), g.get_mpz_t());
}

// a * p[from..] - b * mult * g[1..]
GPoly combine(const GPoly& p, std::size_t from, const Int& a, const GPoly& g, const Monomial& mult, const Int& b,
              const GbContext& ctx) {
  GPoly out;
  out.reserve(p.size() - from + g.size());
  std::size_t i = from, j = 1;
  const bool scale_p = a != 1;
  while (i < p.size() || j < g.size()) {
    int c;
    Monomial gm;
    if (j < g.size()) gm = g[j].m * mult;
    if (i == p.size()) c = -1;
    else if (j == g.size()) c = 1;
    else c = ctx.cmp(p[i].m, gm);
    if (c > 0) {
      out.push_back({p[i].m, scale_p ? Int(p[i].c * a) : p[i].c});
      ++i;
    } else if (c < 0) {
      GTerm t{gm, 0};
      mpz_mul(t.c.get_mpz_t(), g[j].c.get_mpz_t(), b.get_mpz_t());
      mpz_neg(t.c.get_mpz_t(), t.c.get_mpz_t());
      out.push_back(std::move(t));
      ++j;
    } else {
      Int v = p[i].c * a;
      mpz_submul(v.get_mpz_t(), g[j].c.get_mpz_t(), b.get_mpz_t());
      if (v != 0) out.push_back({gm, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

const Reducer* find_reducer(const Monomial& m, const std::vector<Reducer>& reducers, std::size_t n) {
  const std::uint32_t mask = support_mask(m, n);
  for (const auto& r : reducers)
    if ((r.mask & ~mask) == 0 && r.lt.divides(m)) return &r;
  return nullptr;
}

}  // namespace

GPoly reduce_full(GPoly p, const std::vector<Reducer>& reducers, GbContext& ctx, Rat* scale) {
  GPoly rem;
  std::size_t pos = 0;
  Rat s = 1;
  int since_strip = 0;
  while (pos < p.size()) {
    const Reducer* r = find_reducer(p[pos].m, reducers, ctx.nvars());
    if (!r) {
      rem.push_back(std::move(p[pos]));
      ++pos;
      continue;
    }
    ctx.step();
    const Int& lg = r->poly->front().c;
    Int g;
    mpz_gcd(g.get_mpz_t(), lg.get_mpz_t(), p[pos].c.get_mpz_t());
    Int a = lg / g, b = p[pos].c / g;
    if (a < 0) {
      a = -a;
      b = -b;
    }
    const Monomial mult = p[pos].m.quotient(r->lt);
    p = combine(p, pos + 1, a, *r->poly, mult, b, ctx);
    pos = 0;
    if (a != 1) {
      for (auto& t : rem) t.c *= a;
      s *= a;
    }
    if (++since_strip >= 8 || p.empty()) {
      since_strip = 0;
      const Int c = content_of(p, 0, rem);
      if (c > 1) {
        divide_all(p, 0, c);
        divide_all(rem, 0, c);
        s /= c;
      }
    }
  }
  if (!rem.empty()) {
    const Int c = content_of(rem, 0, GPoly{});
    if (c > 1) {
      divide_all(rem, 0, c);
      s /= c;
    }
  }
  if (scale) *scale = s;
  return rem;
}

GPoly s_polynomial(const GPoly& f, const GPoly& g, GbContext& ctx) {
  const Monomial l = f.front().m.lcm(g.front().m);
  Int c;
  mpz_gcd(c.get_mpz_t(), f.front().c.get_mpz_t(), g.front().c.get_mpz_t());
  const Int a = g.front().c / c, b = f.front().c / c;
  // a * (l / lt f) * f - b * (l / lt g) * g; both leading terms cancel.
  GPoly fm;
  fm.reserve(f.size());
  const Monomial mf = l.quotient(f.front().m);
  for (const auto& t : f) fm.push_back({t.m * mf, t.c * a});
  return combine(fm, 1, 1, g, l.quotient(g.front().m), b, ctx);
}

namespace {

struct Elem {
  GPoly p;
  Monomial lt;
  std::uint32_t mask;
  long sugar;
  bool active;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  long sugar;
  std::uint64_t idx;
};

bool pair_before(const Pair& a, const Pair& b) {
  if (a.sugar != b.sugar) return a.sugar < b.sugar;
  if (a.lcm.deg != b.lcm.deg) return a.lcm.deg < b.lcm.deg;
  return a.idx < b.idx;
}

long poly_degree(const GPoly& p) {
  long d = 0;
  for (const auto& t : p) d = std::max<long>(d, t.m.deg);
  return d;
}

void make_positive(GPoly& p) {
  if (!p.empty() && p.front().c < 0)
    for (auto& t : p) t.c = -t.c;
}

class Buchberger {
 public:
  explicit Buchberger(GbContext& ctx) : ctx_(ctx) {}

  std::vector<GPoly> run(std::vector<GPoly> gens) {
    // Process generators smallest first; that keeps the early basis small.
    std::stable_sort(gens.begin(), gens.end(), [&](const GPoly& a, const GPoly& b) {
      if (a.empty() || b.empty()) return !a.empty() && b.empty();
      return ctx_.cmp(a.front().m, b.front().m) < 0;
    });
    for (auto& g : gens) {
      if (g.empty()) continue;
      GPoly h = reduce_full(std::move(g), reducers(), ctx_);
      if (h.empty()) continue;
      const long sugar = poly_degree(h);
      insert(std::move(h), sugar);
      if (unit_) return {GPoly{GTerm{Monomial{}, 1}}};
    }
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), pair_before);
      const Pair pr = *best;
      pairs_.erase(best);
      GPoly s = s_polynomial(elems_[pr.i].p, elems_[pr.j].p, ctx_);
      if (s.empty()) continue;
      GPoly h = reduce_full(std::move(s), reducers(), ctx_);
      if (h.empty()) continue;
      insert(std::move(h), pr.sugar);
      if (unit_) return {GPoly{GTerm{Monomial{}, 1}}};
    }
    return interreduce();
  }

 private:
  std::vector<Reducer> reducers() const {
    std::vector<Reducer> rs;
    for (const auto& e : elems_)
      if (e.active) rs.push_back({&e.p, e.lt, e.mask});
    return rs;
  }

  void insert(GPoly h, long sugar) {
    make_positive(h);
    const Monomial lt = h.front().m;
    if (lt.deg == 0) unit_ = true;
    const std::size_t hi = elems_.size();
    elems_.push_back({std::move(h), lt, support_mask(lt, ctx_.nvars()), sugar, true});
    update(hi);
  }

  // Gebauer-Möller installation of the new element hi.
  void update(std::size_t hi) {
    const Elem& h = elems_[hi];
    std::vector<Pair> c;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!elems_[g].active) continue;
      const Monomial l = h.lt.lcm(elems_[g].lt);
      const long sugar = std::max(h.sugar + static_cast<long>(l.deg - h.lt.deg),
                                  elems_[g].sugar + static_cast<long>(l.deg - elems_[g].lt.deg));
      c.push_back({g, hi, l, sugar, next_idx_++});
    }
    std::vector<Pair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Pair& p = c[k];
      bool keep = h.lt.coprime(elems_[p.i].lt);
      if (!keep) {
        keep = true;
        for (std::size_t m = k + 1; m < c.size() && keep; ++m)
          if (c[m].lcm.divides(p.lcm)) keep = false;
        for (std::size_t m = 0; m < d.size() && keep; ++m)
          if (d[m].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> next;
    for (const auto& p : pairs_) {
      const bool divisible = h.lt.divides(p.lcm);
      const Monomial li = elems_[p.i].lt.lcm(h.lt), lj = elems_[p.j].lt.lcm(h.lt);
      if (!divisible || li == p.lcm || lj == p.lcm) next.push_back(p);
    }
    for (const auto& p : d)
      if (!h.lt.coprime(elems_[p.i].lt)) next.push_back(p);
    pairs_ = std::move(next);
    for (std::size_t g = 0; g < hi; ++g)
      if (elems_[g].active && h.lt.divides(elems_[g].lt)) elems_[g].active = false;
  }

  std::vector<GPoly> interreduce() {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < elems_.size(); ++i)
      if (elems_[i].active) keep.push_back(i);
    std::sort(keep.begin(), keep.end(),
              [&](std::size_t a, std::size_t b) { return ctx_.cmp(elems_[a].lt, elems_[b].lt) < 0; });
    std::vector<GPoly> out;
    for (std::size_t k = 0; k < keep.size(); ++k) {
      std::vector<Reducer> others;
      for (std::size_t m = 0; m < keep.size(); ++m)
        if (m != k) others.push_back({&elems_[keep[m]].p, elems_[keep[m]].lt, elems_[keep[m]].mask});
      GPoly r = reduce_full(elems_[keep[k]].p, others, ctx_);
      make_positive(r);
      out.push_back(std::move(r));
    }
    return out;
  }

  GbContext& ctx_;
  std::vector<Elem> elems_;
  std::vector<Pair> pairs_;
  std::uint64_t next_idx_ = 0;
  bool unit_ = false;
};

}  // namespace

std::vector<GPoly> buchberger(std::vector<GPoly> gens, GbContext& ctx) { return Buchberger(ctx).run(std::move(gens)); }

}  // namespace detail
}  // namespace icotk
