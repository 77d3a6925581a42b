#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "aslforge/ring.hpp"

namespace aslforge {

using Exponent = std::uint32_t;

struct Factor {
  VarIndex var;
  Exponent exp;
  friend auto operator<=>(const Factor&, const Factor&) = default;
};

/// Sparse exponent vector. Factors are kept sorted by variable index with
/// no zero exponents, so structural equality is exponent-map equality.
/// The built-in <=> is a storage order for containers, not a monomial order.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<Factor> factors);
  /// Sorts, merges repeated variables and drops zero exponents.
  static Monomial from_factors(std::vector<Factor> factors);
  static Monomial var(VarIndex v, Exponent e = 1);

  std::span<const Factor> factors() const { return factors_; }
  unsigned total_degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }
  Exponent exponent(VarIndex v) const;

  bool divides(const Monomial& other) const;
  /// Exact quotient this / divisor, or nullopt when divisor does not divide.
  std::optional<Monomial> divide(const Monomial& divisor) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  /// Each variable repeated by its exponent, ascending by index.
  std::vector<VarIndex> expanded() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) {
    return a.factors_ <=> b.factors_;
  }

 private:
  std::vector<Factor> factors_;
  unsigned degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace aslforge
