#include "icotk/fermat/fermat.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <set>
#include <thread>

#include "icotk/errors.hpp"
#include "icotk/ico/surface.hpp"

namespace icotk {

FermatInstance::FermatInstance(std::array<Int, 5> coeffs, unsigned exponent) : a(std::move(coeffs)), n(exponent) {
  for (const auto& c : a)
    if (c == 0) throw DomainError("Fermat instance: coefficients must be nonzero");
  if (n == 0) throw DomainError("Fermat instance: exponent must be at least 1");
}

Int FermatInstance::evaluate(const ProjPoint& x) const {
  if (x.size() != 5) throw DomainError("Fermat instance: expected a point of P^4");
  Int s = 0, t;
  for (std::size_t i = 0; i < 5; ++i) {
    mpz_pow_ui(t.get_mpz_t(), x[i].get_mpz_t(), n);
    s += a[i] * t;
  }
  return s;
}

IcoModel instance_model(const FermatInstance& inst) {
  const RingPtr& ring = FixedGeometry::get().p4();
  Poly f(ring);
  for (std::size_t i = 0; i < 5; ++i)
    f += Poly::monomial(ring, Monomial::variable(i, static_cast<std::uint16_t>(inst.n)), Rat(inst.a[i]));
  return IcoModel({f});
}

Int instance_nu(const FermatInstance& inst, const FactorBudget& budget) {
  Int p = 1;
  for (const auto& c : inst.a) p *= c;
  return int_radical(p, budget);
}

namespace {

using i128 = __int128;

Int to_int(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 m = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string s;
  do {
    s += static_cast<char>('0' + static_cast<int>(m % 10));
    m /= 10;
  } while (m);
  if (neg) s += '-';
  std::reverse(s.begin(), s.end());
  return Int(s);
}

bool isqrt_exact(i128 v, i128* root) {
  if (v < 0) return false;
  i128 r = static_cast<i128>(std::sqrt(static_cast<long double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  *root = r;
  return r * r == v;
}

std::pair<Int, Int> sigma24(const std::vector<Int>& x) {
  // Coefficients of prod (1 + x_i t).
  std::vector<Int> e(x.size() + 1);
  e[0] = 1;
  for (const auto& v : x)
    for (std::size_t k = x.size(); k >= 1; --k) e[k] += v * e[k - 1];
  return {e[2], e[4]};
}

unsigned worker_count(unsigned requested) {
  if (requested) return requested;
  if (const char* env = std::getenv("ICOTK_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// All distinct orderings of a primitive surface point, normalized.
void emit(std::vector<Int> v, std::set<ProjPoint>& out) {
  Int g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g != 1) return;
  const auto [s2, s4] = sigma24(v);
  if (s2 != 0 || s4 != 0) throw Error("scan produced a point off the surface");
  std::sort(v.begin(), v.end());
  do {
    out.insert(ProjPoint(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

void try_pair(long a, long b, long c, i128 P, i128 Q, std::set<ProjPoint>& out) {
  i128 r;
  const i128 disc = P * P - 4 * Q;
  if (!isqrt_exact(disc, &r) || ((P + r) & 1) != 0) return;
  emit({Int(a), Int(b), Int(c), to_int((P + r) / 2), to_int((P - r) / 2)}, out);
}

void scan_worker(long B, unsigned worker, unsigned workers, i128 sweep, std::set<ProjPoint>& out) {
  for (long a = -B; a <= B; ++a) {
    if (static_cast<unsigned long>(a + B) % workers != worker) continue;
    for (long b = a; b <= B; ++b)
      for (long c = b; c <= B; ++c) {
        const i128 s = a + b + c;
        const i128 e2 = static_cast<i128>(a) * b + static_cast<i128>(a) * c + static_cast<i128>(b) * c;
        const i128 e3 = static_cast<i128>(a) * b * c;
        // sigma_2 = e2 + s P + Q = 0 and sigma_4 = e2 Q + e3 P = 0 give P (e3 - s e2) = e2^2.
        const i128 den = e3 - s * e2;
        if (den != 0) {
          const i128 num = e2 * e2;
          if (num % den != 0) continue;
          const i128 P = num / den;
          try_pair(a, b, c, P, -e2 - s * P, out);
        } else if (e2 == 0) {
          for (i128 P = -sweep; P <= sweep; ++P) try_pair(a, b, c, P, -s * P, out);
        }
      }
  }
}

}  // namespace

ScanReport scan_surface(long B, const ScanOptions& opts) {
  if (B < 1) throw DomainError("scan_surface: B must be at least 1");
  if (B > 100000) throw DomainError("scan_surface: B too large for the 128-bit solver");
  const auto start = std::chrono::steady_clock::now();
  const unsigned workers = worker_count(opts.threads);
  i128 sweep = 2 * static_cast<i128>(B) * B;
  if (opts.complete) sweep = std::max(sweep, static_cast<i128>(B + 1) * (B + 1));
  std::vector<std::set<ProjPoint>> partial(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back(scan_worker, B, w, workers, sweep, std::ref(partial[w]));
  for (auto& t : pool) t.join();
  std::set<ProjPoint> all;
  for (auto& p : partial) all.insert(p.begin(), p.end());

  ScanReport rep;
  rep.bound = B;
  rep.strategy = opts.complete ? "3+2 split, complete singular sweep" : "3+2 split";
  rep.points.assign(all.begin(), all.end());
  for (const auto& p : rep.points) (p.is_trivial() ? rep.trivial : rep.nontrivial).push_back(p);
  rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

namespace {

ScanReport filtered(ScanReport rep, const std::function<bool(const ProjPoint&)>& keep, const std::string& tag) {
  std::vector<ProjPoint> pts;
  for (const auto& p : rep.points)
    if (keep(p)) pts.push_back(p);
  rep.points = std::move(pts);
  rep.trivial.clear();
  rep.nontrivial.clear();
  for (const auto& p : rep.points) (p.is_trivial() ? rep.trivial : rep.nontrivial).push_back(p);
  rep.strategy += ", " + tag;
  return rep;
}

}  // namespace

ScanReport scan_instance(const FermatInstance& inst, long B, const ScanOptions& opts) {
  return filtered(scan_surface(B, opts), [&](const ProjPoint& p) { return inst.evaluate(p) == 0; },
                  "instance filter");
}

std::vector<std::vector<std::size_t>> vanishing_subsets(const std::vector<Rat>& u) {
  const std::size_t k = u.size();
  if (k > 20) throw DomainError("vanishing_subsets: too many terms");
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t mask = 1; k >= 2 && mask + 1 < (1u << k); ++mask) {
    Rat s = 0;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) {
        s += u[i];
        idx.push_back(i);
      }
    if (s == 0) out.push_back(std::move(idx));
  }
  return out;
}

UnitEquation unit_reduce(const FermatInstance& inst, const ProjPoint& x, const FactorBudget& budget) {
  if (inst.evaluate(x) != 0) throw DomainError("unit_reduce: point is not on the instance curve");
  UnitEquation eq;
  for (std::size_t i = 0; i < 5; ++i)
    if (x[i] != 0) eq.indices.push_back(i);
  if (eq.indices.size() < 2) throw DomainError("unit_reduce: need at least two nonzero coordinates");
  eq.k = static_cast<unsigned>(eq.indices.size() - 1);
  const std::size_t ref = eq.indices.back();
  Int prod = 1;
  for (std::size_t i : eq.indices) prod *= inst.a[i] * x[i];
  eq.S = prod == 1 || prod == -1 ? std::vector<Int>{} : prime_factors(prod, budget);

  Rat sum = 0;
  for (unsigned j = 0; j < eq.k; ++j) {
    const std::size_t i = eq.indices[j];
    Rat ratio = make_rat(x[i], x[ref]), p = 1;
    for (unsigned e = 0; e < inst.n; ++e) p *= ratio;
    const Rat u = -make_rat(inst.a[i], inst.a[ref]) * p;
    if (!is_s_unit(u, eq.S)) throw Error("unit_reduce: u_" + std::to_string(j) + " is not an S-unit");
    eq.u.push_back(u);
    sum += u;
  }
  if (sum != 1) throw Error("unit_reduce: unit sum is not 1");
  eq.vanishing_subsets = vanishing_subsets(eq.u);
  eq.degenerate = !eq.vanishing_subsets.empty();
  const auto [s2, s4] = sigma24(x.coords());
  eq.on_surface = s2 == 0 && s4 == 0;
  return eq;
}

bool z_member_ratio(const std::vector<Int>& x) {
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] == 0) continue;
    bool paired = false;
    for (std::size_t i = 0; i < x.size() && !paired; ++i) paired = i != j && abs(x[i]) == abs(x[j]);
    if (!paired) return false;
  }
  return true;
}

bool z_member_scheme(const std::vector<Int>& x) {
  for (std::size_t j = 0; j < x.size(); ++j) {
    bool found = false;
    for (std::size_t i = 0; i < x.size() && !found; ++i)
      found = i != j && x[i] * x[i] * x[j] - x[j] * x[j] * x[j] == 0;
    if (!found) return false;
  }
  return true;
}

bool z_member(const ProjPoint& x) {
  const bool r = z_member_ratio(x.coords());
  if (r != z_member_scheme(x.coords())) throw Error("z_member: the two definitions disagree at " + x.to_string());
  return r;
}

ScanReport z_triviality_scan(long B, const ScanOptions& opts) {
  return filtered(scan_surface(B, opts), [](const ProjPoint& p) { return !p.is_trivial() && z_member(p); },
                  "Z filter");
}

std::vector<std::vector<Rat>> sunit_bounded(const std::vector<Int>& S, unsigned k, unsigned E,
                                            std::uint64_t max_candidates) {
  if (k == 0) throw DomainError("sunit_bounded: k must be at least 1");
  for (const auto& p : S)
    if (p < 2) throw DomainError("sunit_bounded: S must consist of primes");
  std::vector<Rat> units{Rat(1)};
  for (const auto& p : S) {
    std::vector<Rat> next;
    for (const auto& u : units) {
      Rat pw = 1;
      for (unsigned e = 0; e < E; ++e) pw *= p;
      // u * p^e for e in [-E, E].
      Rat v = u / pw;
      for (unsigned e = 0; e <= 2 * E; ++e) {
        next.push_back(v);
        v *= p;
      }
    }
    units = std::move(next);
  }
  const std::size_t half = units.size();
  for (std::size_t i = 0; i < half; ++i) units.push_back(-units[i]);
  std::sort(units.begin(), units.end());
  units.erase(std::unique(units.begin(), units.end()), units.end());
  const std::set<Rat> lookup(units.begin(), units.end());

  double count = 1;
  for (unsigned i = 0; i + 1 < k; ++i) count *= static_cast<double>(units.size());
  if (count > static_cast<double>(max_candidates))
    throw BudgetExceeded("computation limit: " + std::to_string(static_cast<long double>(count)) +
                         " candidates exceed " + std::to_string(max_candidates));

  std::vector<std::vector<Rat>> out;
  std::vector<Rat> cur;
  std::function<void(const Rat&)> rec = [&](const Rat& partial) {
    if (cur.size() + 1 == k) {
      const Rat last = 1 - partial;
      if (lookup.count(last)) {
        cur.push_back(last);
        out.push_back(cur);
        cur.pop_back();
      }
      return;
    }
    for (const auto& u : units) {
      cur.push_back(u);
      rec(partial + u);
      cur.pop_back();
    }
  };
  rec(Rat(0));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace icotk
