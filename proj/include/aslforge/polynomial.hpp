#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aslforge/field.hpp"
#include "aslforge/monomial.hpp"
#include "aslforge/order.hpp"
#include "aslforge/ring.hpp"

namespace aslforge {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// A ring context bundled with its monomial order. Polynomials hold a
/// shared pointer to one of these.
class Ring {
 public:
  static RingPtr make(RingContext ctx);

  const RingContext& context() const { return ctx_; }
  const MonomialOrder& order() const { return order_; }
  const Field& field() const { return ctx_.field(); }
  int n() const { return ctx_.n(); }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    return order_.compare(a, b);
  }
  /// "x_1_1*y_1^2", or "1" for the empty monomial.
  std::string format(const Monomial& m) const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.ctx_ == b.ctx_; }

 private:
  explicit Ring(RingContext ctx) : ctx_(std::move(ctx)), order_(build_order(ctx_)) {}

  RingContext ctx_;
  MonomialOrder order_;
};

struct Term {
  Coeff coeff;
  Monomial monomial;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial: nonzero terms with distinct monomials, strictly
/// decreasing in the ring's order. Zero is the empty term list.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);
  /// Normalizes: sorts, combines like terms, drops zeros, reduces
  /// coefficients into the ring's field.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  static Polynomial constant(RingPtr ring, const Coeff& c);
  static Polynomial variable(RingPtr ring, VarIndex v);
  static Polynomial monomial(RingPtr ring, const Coeff& c, Monomial m);

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  unsigned total_degree() const;
  bool is_homogeneous() const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }

 private:
  friend class PolynomialBuilder;
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Throws UsageError unless both polynomials live in the same ring.
void require_same_ring(const Polynomial& f, const Polynomial& g);

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial subtract(const Polynomial& f, const Polynomial& g);
Polynomial multiply(const Polynomial& f, const Polynomial& g);
Polynomial scale(const Polynomial& f, const Coeff& c);
/// c * m * f.
Polynomial multiply_term(const Polynomial& f, const Coeff& c, const Monomial& m);
/// f - c * m * g in one merge pass.
Polynomial subtract_multiple(const Polynomial& f, const Coeff& c, const Monomial& m,
                             const Polynomial& g);
/// Maximal term under the ring's order; nullopt for the zero polynomial.
std::optional<Term> leading_term(const Polynomial& f);
/// f without its leading term. Zero stays zero.
Polynomial drop_leading_term(const Polynomial& f);
/// Divides by the leading coefficient. Zero stays zero.
Polynomial make_monic(const Polynomial& f);

inline Polynomial operator+(const Polynomial& f, const Polynomial& g) { return add(f, g); }
inline Polynomial operator-(const Polynomial& f, const Polynomial& g) { return subtract(f, g); }
inline Polynomial operator*(const Polynomial& f, const Polynomial& g) { return multiply(f, g); }

}  // namespace aslforge
