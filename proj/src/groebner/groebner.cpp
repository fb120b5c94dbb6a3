#include "icotk/groebner/groebner.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "engine.hpp"
#include "icotk/errors.hpp"

namespace icotk {

using detail::GbContext;
using detail::GPoly;

namespace {

void check_same_ring(const std::vector<Poly>& ps, const RingPtr& ring) {
  for (const auto& p : ps)
    if (!same_ring(p.ring(), ring)) throw DomainError("generators live in different rings");
}

std::vector<detail::Reducer> reducers_of(const std::vector<GPoly>& gb, std::size_t n) {
  std::vector<detail::Reducer> rs;
  for (const auto& g : gb) rs.push_back({&g, g.front().m, detail::support_mask(g.front().m, n)});
  return rs;
}

std::string fnv_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string cache_key(const RingPtr& ring, const std::vector<Poly>& gens, const MonomialOrder& ord) {
  std::string key = "ring:";
  for (const auto& n : ring->names()) key += n + ",";
  key += "|order:" + ord.tag() + "|gens:";
  for (const auto& g : gens) key += g.to_string() + ";";
  return key;
}

// Loads a cached basis; any mismatch or failed re-verification yields nullopt.
std::optional<std::vector<Poly>> load_cached(const std::filesystem::path& file, const std::string& key,
                                             const RingPtr& ring, const std::vector<Poly>& gens,
                                             const MonomialOrder& ord, GbBudget budget) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != key) return std::nullopt;
  std::vector<Poly> basis;
  try {
    while (std::getline(in, line))
      if (!line.empty()) basis.push_back(poly_parse(line, ring));
    if (basis.empty()) return std::nullopt;
    if (!satisfies_buchberger_criterion(basis, ord, budget)) return std::nullopt;
    for (const auto& g : gens)
      if (!reduce(g, basis, ord, budget).is_zero()) return std::nullopt;
  } catch (const ParseError&) {
    return std::nullopt;
  }
  return basis;
}

void store_cached(const std::filesystem::path& file, const std::string& key, const std::vector<Poly>& basis) {
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  const auto tmp = file.string() + ".tmp" + std::to_string(reinterpret_cast<std::uintptr_t>(&basis));
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << key << '\n';
    for (const auto& g : basis) out << g.to_string() << '\n';
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

std::string fresh_name(const Ring& ring, const std::string& base) {
  std::string name = base;
  while (ring.index_of(name)) name += "_";
  return name;
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Poly> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  check_same_ring(generators, ring_);
  for (auto& g : generators)
    if (!g.is_zero()) gens_.push_back(std::move(g));
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Poly& p) { return p.is_homogeneous(); });
}

const std::vector<Poly>& Ideal::basis(const MonomialOrder& ord, GbBudget budget) const {
  std::shared_ptr<Entry> entry;
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto& slot = cache_->entries[ord.tag()];
    if (!slot) slot = std::make_shared<Entry>();
    entry = slot;
  }
  std::call_once(entry->once, [&] {
    const char* dir = std::getenv("ICOTK_CACHE_DIR");
    if (!dir || !*dir) {
      entry->basis = groebner_basis(gens_, ord, budget);
      return;
    }
    const std::string key = cache_key(ring_, gens_, ord);
    const auto file = std::filesystem::path(dir) / (fnv_hex(key) + ".gb");
    if (auto cached = load_cached(file, key, ring_, gens_, ord, budget)) {
      entry->basis = std::move(*cached);
      return;
    }
    entry->basis = groebner_basis(gens_, ord, budget);
    store_cached(file, key, entry->basis);
  });
  return entry->basis;
}

std::vector<Poly> groebner_basis(const std::vector<Poly>& generators, const MonomialOrder& ord, GbBudget budget) {
  if (generators.empty()) return {};
  const RingPtr& ring = generators.front().ring();
  check_same_ring(generators, ring);
  GbContext ctx(ord, ring->size(), detail::effective_limit(budget.steps));
  std::vector<GPoly> gs;
  for (const auto& g : generators)
    if (!g.is_zero()) gs.push_back(detail::to_gpoly(g, ctx));
  if (gs.empty()) return {};
  std::vector<Poly> out;
  for (const auto& g : detail::buchberger(std::move(gs), ctx)) out.push_back(detail::from_gpoly(g, ring));
  return out;
}

Poly reduce(const Poly& p, const std::vector<Poly>& gb, const MonomialOrder& ord, GbBudget budget) {
  if (p.is_zero() || gb.empty()) return p;
  GbContext ctx(ord, p.ring()->size(), detail::effective_limit(budget.steps));
  std::vector<GPoly> g;
  for (const auto& b : gb) g.push_back(detail::to_gpoly(b, ctx));
  Rat content;
  GPoly gp = detail::to_gpoly(p, ctx, &content);
  Rat scale;
  GPoly r = detail::reduce_full(std::move(gp), reducers_of(g, ctx.nvars()), ctx, &scale);
  if (r.empty()) return Poly(p.ring());
  return detail::from_gpoly(r, p.ring()) * (content / scale);
}

Poly normal_form(const Poly& p, const Ideal& I, const MonomialOrder& ord, GbBudget budget) {
  if (!same_ring(p.ring(), I.ring())) throw DomainError("normal_form: polynomial and ideal live in different rings");
  return reduce(p, I.basis(ord, budget), ord, budget);
}

bool satisfies_buchberger_criterion(const std::vector<Poly>& gb, const MonomialOrder& ord, GbBudget budget) {
  if (gb.empty()) return true;
  GbContext ctx(ord, gb.front().ring()->size(), detail::effective_limit(budget.steps));
  std::vector<GPoly> g;
  for (const auto& b : gb) {
    if (b.is_zero()) return false;
    g.push_back(detail::to_gpoly(b, ctx));
  }
  const auto rs = reducers_of(g, ctx.nvars());
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (g[i].front().m.coprime(g[j].front().m)) continue;
      GPoly s = detail::s_polynomial(g[i], g[j], ctx);
      if (!detail::reduce_full(std::move(s), rs, ctx).empty()) return false;
    }
  }
  return true;
}

Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& first_block, GbBudget budget) {
  const RingPtr& ring = I.ring();
  std::vector<bool> drop(ring->size(), false);
  for (auto v : first_block) {
    if (v >= ring->size()) throw DomainError("eliminate: variable index out of range");
    drop[v] = true;
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < ring->size(); ++i)
    if (!drop[i]) names.push_back(ring->name(i));
  RingPtr sub = names.size() == ring->size() ? ring : make_ring(names);
  if (first_block.empty()) return Ideal(sub, I.generators());

  const auto& gb = I.basis(MonomialOrder::block(first_block), budget);
  std::vector<Poly> kept;
  for (const auto& g : gb) {
    bool free = true;
    for (const auto& t : g.terms())
      for (auto v : first_block)
        if (t.mono[v]) free = false;
    if (free) kept.push_back(g.embed(sub));
  }
  return Ideal(sub, std::move(kept));
}

Ideal saturate(const Ideal& I, const Poly& g, GbBudget budget) {
  if (g.is_zero()) throw DomainError("saturate: zero polynomial");
  if (!same_ring(g.ring(), I.ring())) throw DomainError("saturate: ring mismatch");
  const RingPtr& ring = I.ring();
  auto names = ring->names();
  names.push_back(fresh_name(*ring, "w"));
  RingPtr ext = make_ring(names);
  std::vector<Poly> gens;
  for (const auto& f : I.generators()) gens.push_back(f.embed(ext));
  const Poly w = Poly::variable(ext, ring->size());
  gens.push_back(Poly::constant(ext, 1) - w * g.embed(ext));
  Ideal e = eliminate(Ideal(ext, std::move(gens)), {ring->size()}, budget);
  std::vector<Poly> back;
  for (const auto& f : e.generators()) back.push_back(f.embed(ring));
  return Ideal(ring, std::move(back));
}

bool radical_member(const Poly& p, const Ideal& I, GbBudget budget) {
  if (!same_ring(p.ring(), I.ring())) throw DomainError("radical_member: ring mismatch");
  if (p.is_zero()) return true;
  const RingPtr& ring = I.ring();
  auto names = ring->names();
  names.push_back(fresh_name(*ring, "w"));
  RingPtr ext = make_ring(names);
  std::vector<Poly> gens;
  for (const auto& f : I.generators()) gens.push_back(f.embed(ext));
  gens.push_back(Poly::constant(ext, 1) - Poly::variable(ext, ring->size()) * p.embed(ext));
  const auto gb = groebner_basis(gens, MonomialOrder::grevlex(), budget);
  return gb.size() == 1 && gb.front().is_constant();
}

}  // namespace icotk
