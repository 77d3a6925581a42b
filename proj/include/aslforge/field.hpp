#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace aslforge {

using Coeff = mpq_class;

/// Coefficient field: exact rationals, or GF(p) with elements stored as
/// canonical representatives 0..p-1 inside an mpq_class.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field{}; }
  /// Throws UsageError unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);
  /// Parses "rationals" or "gf(p)".
  static Field parse(const std::string& spec);

  bool is_prime_field() const { return prime_ != 0; }
  std::uint64_t characteristic() const { return prime_; }
  std::string name() const;

  Coeff normalize(const Coeff& c) const;
  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  /// Throws UsageError on zero.
  Coeff inv(const Coeff& a) const;
  Coeff div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t p) : prime_(p) {}
  std::uint64_t prime_ = 0;
};

/// "num/den" with the denominator always present.
std::string format_coeff(const Coeff& c);
/// Inverse of format_coeff; also accepts a bare integer.
Coeff parse_coeff(const std::string& s);

}  // namespace aslforge
