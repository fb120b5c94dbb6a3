#include <cctype>

#include "icotk/algebra/poly.hpp"
#include "icotk/errors.hpp"

namespace icotk {
namespace {

std::string monomial_text(const Monomial& m, const Ring& ring) {
  std::string out;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

class Parser {
 public:
  Parser(const std::string& text, const RingPtr& ring) : s_(text), ring_(ring) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) { throw ParseError("syntax error: " + msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  Poly expr() {
    Poly acc(ring_);
    bool first = true;
    for (;;) {
      int sign = 1;
      if (peek('+') || peek('-')) {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        return acc;
      }
      Poly t = term();
      acc = sign > 0 ? acc + t : acc - t;
      first = false;
    }
  }

  Poly term() {
    Poly acc = factor();
    while (peek('*')) {
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  Poly factor() {
    Poly base = primary();
    if (peek('^')) {
      ++pos_;
      skip();
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected exponent");
      unsigned long e = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        e = e * 10 + static_cast<unsigned>(s_[pos_] - '0');
        if (e > 0xFFFF) fail("exponent too large");
        ++pos_;
      }
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Int integer() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return Int(s_.substr(start, pos_ - start));
  }

  Poly primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '+' || c == '-') {
      ++pos_;
      Poly p = primary();
      return c == '-' ? -p : p;
    }
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num = integer();
      Int den = 1;
      if (peek('/')) {
        ++pos_;
        skip();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected denominator");
        const std::size_t at = pos_;
        den = integer();
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
      }
      return Poly::constant(ring_, make_rat(num, den));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Poly::variable(ring_, *idx);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool neg = t.coeff < 0;
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    const Rat mag = abs(t.coeff);
    const std::string mono = monomial_text(t.mono, *ring_);
    if (mono.empty()) {
      out += icotk::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += icotk::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

Poly poly_parse(const std::string& text, const RingPtr& ring) { return Parser(text, ring).parse(); }

}  // namespace icotk
