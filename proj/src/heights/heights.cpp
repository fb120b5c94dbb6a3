#include "icotk/heights/heights.hpp"

#include <mpfr.h>

#include <cstdlib>

#include "icotk/errors.hpp"

namespace icotk {

namespace {

const Rat kTrillion = Rat(Int("1000000000000"));

// RAII wrapper; the toolkit only needs a handful of MPFR calls.
struct Mpfr {
  mpfr_t v;
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v, prec); }
  ~Mpfr() { mpfr_clear(v); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
};

bool is_power_of_ten(const Int& m, unsigned long* k) {
  if (m < 1) return false;
  Int t = m;
  unsigned long n = 0;
  while (t % 10 == 0) {
    t /= 10;
    ++n;
  }
  *k = n;
  return t == 1;
}

// Prime decomposition with log10(5) rewritten as 1 - log10(2), so equal values
// have equal canonical forms. Composites that resist a small factoring budget
// stay as keys.
std::pair<Rat, std::map<Int, Rat>> canonical(const LogBound& b) {
  Rat e = b.exponent();
  std::map<Int, Rat> out;
  const FactorBudget budget{100'000, 200'000};
  for (const auto& [m, c] : b.terms()) {
    std::vector<Int> ps;
    try {
      ps = prime_factors(m, budget);
    } catch (const UnfactoredInput&) {
      out[m] += c;
      continue;
    }
    Int rest = m;
    for (const Int& p : ps) {
      unsigned long v = 0;
      while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
        rest /= p;
        ++v;
      }
      const Rat cv = c * static_cast<long>(v);
      if (p == 5) {
        e += cv;
        out[Int(2)] -= cv;
      } else {
        out[p] += cv;
      }
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return {e, out};
}

std::size_t magnitude_bits(const LogBound& b) {
  std::size_t bits = mpz_sizeinbase(b.exponent().get_num_mpz_t(), 2) + 8;
  for (const auto& [m, c] : b.terms())
    bits = std::max(bits, mpz_sizeinbase(c.get_num_mpz_t(), 2) + mpz_sizeinbase(m.get_mpz_t(), 2) + 8);
  return bits;
}

// Directed evaluation: an upper bound for up = true, a lower bound otherwise.
void evaluate(mpfr_t out, const Rat& e, const std::map<Int, Rat>& terms, bool up) {
  const mpfr_rnd_t dir = up ? MPFR_RNDU : MPFR_RNDD;
  const mpfr_rnd_t rev = up ? MPFR_RNDD : MPFR_RNDU;
  const mpfr_prec_t prec = mpfr_get_prec(out);
  mpfr_set_q(out, e.get_mpq_t(), dir);
  for (const auto& [m, c] : terms) {
    Mpfr lg(prec);
    const bool positive = c > 0;
    // c * log10(m) is increasing in log10(m) iff c > 0.
    const mpfr_rnd_t lr = positive ? dir : rev;
    mpfr_set_z(lg.v, m.get_mpz_t(), lr);
    mpfr_log10(lg.v, lg.v, lr);
    mpfr_mul_q(lg.v, lg.v, c.get_mpq_t(), dir);
    mpfr_add(out, out, lg.v, dir);
  }
}

}  // namespace

LogBound LogBound::constant(const Rat& e) {
  LogBound b;
  b.e_ = e;
  return b;
}

LogBound LogBound::log10_of(const Int& m, const Rat& c) {
  if (m < 1) throw DomainError("log10 of a non-positive integer: " + m.get_str());
  LogBound b;
  unsigned long k = 0;
  if (c == 0 || m == 1) return b;
  if (is_power_of_ten(m, &k)) {
    b.e_ = c * static_cast<long>(k);
    return b;
  }
  b.terms_[m] = c;
  return b;
}

LogBound LogBound::operator+(const LogBound& o) const {
  LogBound r = *this;
  r.e_ += o.e_;
  for (const auto& [m, c] : o.terms_) {
    r.terms_[m] += c;
    if (r.terms_[m] == 0) r.terms_.erase(m);
  }
  return r;
}

LogBound LogBound::operator-(const LogBound& o) const { return *this + o * Rat(-1); }

LogBound LogBound::operator*(const Rat& c) const {
  if (c == 0) return {};
  LogBound r = *this;
  r.e_ *= c;
  for (auto& [m, k] : r.terms_) k *= c;
  return r;
}

int LogBound::compare(const LogBound& a, const LogBound& b) {
  const auto [e, terms] = canonical(a - b);
  if (terms.empty()) return sgn(e);
  const std::size_t base = magnitude_bits(a - b);
  for (mpfr_prec_t prec = 128; prec <= (1 << 20); prec *= 2) {
    Mpfr lo(prec + base), hi(prec + base);
    evaluate(lo.v, e, terms, false);
    evaluate(hi.v, e, terms, true);
    if (mpfr_sgn(lo.v) > 0) return 1;
    if (mpfr_sgn(hi.v) < 0) return -1;
  }
  throw Error("LogBound::compare: could not separate values");
}

std::string LogBound::decomposition() const {
  std::string s;
  if (e_ != 0 || terms_.empty()) s = to_string(e_);
  for (const auto& [m, c] : terms_) {
    const Rat a = abs(c);
    std::string t = a == 1 ? "" : to_string(a) + "*";
    t += "log10(" + m.get_str() + ")";
    if (s.empty())
      s = (c < 0 ? "-" : "") + t;
    else
      s += (c < 0 ? " - " : " + ") + t;
  }
  return s;
}

std::string LogBound::render(unsigned digits) const {
  if (terms_.empty() && e_.get_den() == 1) return e_.get_num().get_str();
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(magnitude_bits(*this) + 4 * digits + 128);
  Mpfr x(prec);
  evaluate(x.v, e_, terms_, true);
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*RUf", static_cast<int>(digits), x.v);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

double LogBound::approx() const {
  Mpfr x(static_cast<mpfr_prec_t>(magnitude_bits(*this) + 128));
  evaluate(x.v, e_, terms_, true);
  return mpfr_get_d(x.v, MPFR_RNDN);
}

LogBound sum_bound(const std::optional<LogBound>& a, const std::optional<LogBound>& b) {
  if (!a && !b) throw DomainError("sum_bound: both terms are zero");
  if (!a) return *b;
  if (!b) return *a;
  const LogBound& m = LogBound::compare(*a, *b) >= 0 ? *a : *b;
  return m + LogBound::log10_of(2);
}

std::string PointHeight::natural_log(unsigned digits) const {
  if (max_coord == 1) return "0";
  Mpfr x(static_cast<mpfr_prec_t>(4 * digits + 64 + mpz_sizeinbase(max_coord.get_mpz_t(), 2)));
  mpfr_set_z(x.v, max_coord.get_mpz_t(), MPFR_RNDN);
  mpfr_log(x.v, x.v, MPFR_RNDN);
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*RNf", static_cast<int>(digits), x.v);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

PointHeight point_height(const ProjPoint& p) { return {p.max_abs()}; }

std::string tag_name(BoundTag tag) {
  switch (tag) {
    case BoundTag::ThmC:
      return "ThmC";
    case BoundTag::ThmE:
      return "ThmE/CorXf";
    case BoundTag::CorD:
      return "CorD";
    case BoundTag::CorF:
      return "CorF";
    case BoundTag::CorPullback:
      return "CorPullback";
  }
  return "?";
}

namespace {

void require_positive(const Int& v, const char* name) {
  if (v < 1) throw DomainError(std::string(name) + " must be at least 1");
}

HeightCertificate nu_bound(BoundTag tag, const Int& nu) {
  require_positive(nu, "nu");
  HeightCertificate c{tag, {{"nu", nu.get_str()}, {"c", "10^(10^12)"}}, {}, "Weil height h(x)"};
  c.bound = LogBound::constant(kTrillion) + LogBound::log10_of(nu, 24);
  return c;
}

}  // namespace

HeightCertificate bound_thmE(const Int& nu) { return nu_bound(BoundTag::ThmE, nu); }

HeightCertificate bound_corPullback(const Int& nu) { return nu_bound(BoundTag::CorPullback, nu); }

HeightCertificate bound_corD(const Int& d, const Int& absF) {
  require_positive(d, "d");
  require_positive(absF, "|F|");
  const Int kappa = Int(16777216) * d * d;
  HeightCertificate c{BoundTag::CorD,
                      {{"d", d.get_str()},
                       {"absF", absF.get_str()},
                       {"kappa", kappa.get_str()},
                       {"log8_mu", Int(kappa * kappa * d).get_str()}},
                      {},
                      "Weil height h(x)"};
  c.bound = LogBound::log10_of(8, Rat(kappa * kappa * d)) + LogBound::log10_of(absF, Rat(kappa));
  return c;
}

HeightCertificate bound_corF(const std::vector<Int>& a, const FactorBudget& budget) {
  if (a.size() != 5) throw DomainError("bound_corF: expected five coefficients");
  Int prod = 1;
  std::string echo;
  for (const auto& x : a) {
    if (x == 0) throw DomainError("bound_corF: coefficients must be nonzero");
    prod *= x;
    echo += (echo.empty() ? "" : ",") + x.get_str();
  }
  const Int nu = int_radical(prod, budget);
  HeightCertificate c{
      BoundTag::CorF, {{"a", echo}, {"nu", nu.get_str()}, {"kappa", "10^(10^12)"}}, {}, "log|x_i| of each coordinate"};
  c.bound = LogBound::constant(kTrillion) + LogBound::log10_of(nu, 24);
  return c;
}

std::optional<LogBound> parse_height_value(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (ch != ' ') t += ch;
  if (t.empty()) throw DomainError("empty height value");
  if (t.rfind("10^", 0) == 0) {
    std::string ex = t.substr(3);
    if (ex.size() >= 2 && ex.front() == '(' && ex.back() == ')') ex = ex.substr(1, ex.size() - 2);
    return LogBound::constant(parse_rational(ex));
  }
  Rat q;
  const auto dot = t.find('.');
  if (dot != std::string::npos) {
    const std::string whole = t.substr(0, dot), frac = t.substr(dot + 1);
    if (frac.find_first_not_of("0123456789") != std::string::npos || whole.find('-') != std::string::npos)
      throw DomainError("bad decimal '" + text + "'");
    Int den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    q = make_rat(Int(whole.empty() ? "0" : whole) * den + Int(frac.empty() ? "0" : frac), den);
  } else {
    q = parse_rational(t);
  }
  if (q < 0) throw DomainError("height value must be nonnegative");
  if (q == 0) return std::nullopt;
  return LogBound::log10_of(q.get_num()) - LogBound::log10_of(q.get_den());
}

HeightCertificate bound_thmC(const Int& dX, const Int& nu, const std::string& hX) {
  require_positive(dX, "d_X");
  require_positive(nu, "nu");
  const auto h = parse_height_value(hX);
  HeightCertificate c{BoundTag::ThmC,
                      {{"dX", dX.get_str()}, {"nu", nu.get_str()}, {"hX", hX}, {"c", "10^(10^12)"}},
                      {},
                      "Weil height h(x)"};
  const LogBound main = LogBound::constant(kTrillion) + LogBound::log10_of(dX) + LogBound::log10_of(nu, 24);
  c.bound = sum_bound(main, h);
  return c;
}

LogBound containing_model_height_bound(const Int& d, const Int& absF) {
  require_positive(d, "d");
  require_positive(absF, "|F|");
  Int u = 1;
  for (int i = 0; i < 5; ++i) u *= Int(86) * d;
  const Int v = Int(258) * d * Int(258) * d;
  return LogBound::log10_of(3, Rat(u)) + LogBound::log10_of(absF, Rat(v));
}

}  // namespace icotk
