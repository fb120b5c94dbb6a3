#include "icotk/ico/proj_point.hpp"

#include <sstream>

#include "icotk/errors.hpp"

namespace icotk {

ProjPoint::ProjPoint(std::vector<Int> coords) : c_(std::move(coords)) {
  Int g = 0;
  for (const auto& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) throw DomainError("projective point with all coordinates zero");
  for (const auto& x : c_) {
    if (x == 0) continue;
    if (x < 0) g = -g;
    break;
  }
  for (auto& x : c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

ProjPoint ProjPoint::from_rationals(std::span<const Rat> coords) {
  Int l = 1;
  for (const auto& q : coords) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Int> v;
  v.reserve(coords.size());
  for (const auto& q : coords) v.push_back(q.get_num() * (l / q.get_den()));
  return ProjPoint(std::move(v));
}

ProjPoint ProjPoint::parse(const std::string& csv) {
  std::vector<Int> v;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t()");
    const auto e = item.find_last_not_of(" \t()");
    if (b == std::string::npos) throw DomainError("empty coordinate in '" + csv + "'");
    const std::string tok = item.substr(b, e - b + 1);
    Int x;
    if (x.set_str(tok[0] == '+' ? tok.substr(1) : tok, 10) != 0) throw DomainError("bad coordinate '" + tok + "'");
    v.push_back(x);
  }
  return ProjPoint(std::move(v));
}

Int ProjPoint::max_abs() const {
  Int m = 0;
  for (const auto& x : c_)
    if (abs(x) > m) m = abs(x);
  return m;
}

bool ProjPoint::is_trivial() const { return max_abs() <= 1; }

std::string ProjPoint::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ", ";
    s += c_[i].get_str();
  }
  return s + ")";
}

}  // namespace icotk
