#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace icotk {

/// Upper bound on the number of ring variables. The largest ring the toolkit
/// builds is x,y,z,X0..X4 plus one Rabinowitsch variable.
inline constexpr std::size_t kMaxVars = 16;

enum class CoefficientDomain { Integer, Rational };

/// An ordered list of variable names. Rings compare equal iff their variable
/// lists are equal.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names,
                CoefficientDomain domain = CoefficientDomain::Rational);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  CoefficientDomain domain() const { return domain_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  bool operator==(const Ring& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  CoefficientDomain domain_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names);
/// The plane ring x, y, z.
RingPtr p2_ring();
/// The ring x0..x4 of the ambient P^4.
RingPtr p4_ring();

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

/// Exponent vector. Unused trailing slots stay zero so comparisons and hashes
/// do not need the ring size.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::uint32_t deg = 0;

  std::uint16_t operator[](std::size_t i) const { return exp[i]; }
  void set(std::size_t i, std::uint16_t e) {
    deg = deg - exp[i] + e;
    exp[i] = e;
  }
  bool operator==(const Monomial& o) const { return exp == o.exp; }
  bool operator!=(const Monomial& o) const { return !(exp == o.exp); }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// this / o, assuming o divides this.
  Monomial quotient(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  Monomial gcd(const Monomial& o) const;
  bool coprime(const Monomial& o) const;

  static Monomial variable(std::size_t i, std::uint16_t e = 1) {
    Monomial m;
    m.set(i, e);
    return m;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto e : m.exp) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Graded reverse lexicographic comparison on the first `n` variables:
/// negative if a < b, zero if equal, positive if a > b.
int grevlex_compare(const Monomial& a, const Monomial& b, std::size_t n);

/// All monomials of total degree d in n variables, in decreasing grevlex order.
std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d);

}  // namespace icotk
