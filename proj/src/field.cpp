#include "aslforge/field.hpp"

#include <regex>

#include "aslforge/errors.hpp"

namespace aslforge {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw UsageError("field characteristic must be a prime below 2^31, got " + std::to_string(p));
  }
  return Field{p};
}

Field Field::parse(const std::string& spec) {
  if (spec == "rationals" || spec == "QQ") return rationals();
  static const std::regex gf(R"(gf\((\d+)\))", std::regex::icase);
  std::smatch m;
  if (std::regex_match(spec, m, gf)) {
    return prime(std::stoull(m[1].str()));
  }
  throw UsageError("unknown field '" + spec + "', expected 'rationals' or 'gf(p)'");
}

std::string Field::name() const {
  return is_prime_field() ? "gf(" + std::to_string(prime_) + ")" : "rationals";
}

Coeff Field::normalize(const Coeff& c) const {
  if (!is_prime_field()) return c;
  mpz_class p(static_cast<unsigned long>(prime_));
  mpz_class num = c.get_num() % p;
  mpz_class den = c.get_den() % p;
  if (den == 0) throw UsageError("denominator vanishes in " + name());
  mpz_class den_inv;
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  mpz_class r = (num * den_inv) % p;
  if (r < 0) r += p;
  return Coeff(r);
}

Coeff Field::add(const Coeff& a, const Coeff& b) const {
  Coeff r = a + b;
  return is_prime_field() ? normalize(r) : r;
}

Coeff Field::sub(const Coeff& a, const Coeff& b) const {
  Coeff r = a - b;
  return is_prime_field() ? normalize(r) : r;
}

Coeff Field::mul(const Coeff& a, const Coeff& b) const {
  Coeff r = a * b;
  return is_prime_field() ? normalize(r) : r;
}

Coeff Field::neg(const Coeff& a) const {
  Coeff r = -a;
  return is_prime_field() ? normalize(r) : r;
}

Coeff Field::inv(const Coeff& a) const {
  if (sgn(a) == 0) throw UsageError("division by zero");
  if (!is_prime_field()) return Coeff(1) / a;
  mpz_class p(static_cast<unsigned long>(prime_));
  mpz_class v = a.get_num() % p;
  if (v < 0) v += p;
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t()) == 0) {
    throw UsageError("division by zero in " + name());
  }
  return Coeff(r);
}

std::string format_coeff(const Coeff& c) {
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Coeff parse_coeff(const std::string& s) {
  Coeff c;
  if (c.set_str(s, 10) != 0 || sgn(c.get_den()) == 0) {
    throw UsageError("malformed coefficient '" + s + "'");
  }
  c.canonicalize();
  return c;
}

}  // namespace aslforge
