#include "aslforge/polynomial.hpp"

#include <algorithm>

#include "aslforge/errors.hpp"

namespace aslforge {

RingPtr Ring::make(RingContext ctx) {
  return RingPtr(new Ring(std::move(ctx)));
}

std::string Ring::format(const Monomial& m) const {
  if (m.is_one()) return "1";
  std::string out;
  for (const Factor& f : m.factors()) {
    if (!out.empty()) out += '*';
    out += aslforge::to_string(ctx_.variable(f.var));
    if (f.exp > 1) out += "^" + std::to_string(f.exp);
  }
  return out;
}

class PolynomialBuilder {
 public:
  // Terms must already be normalized.
  static Polynomial adopt(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }
};

namespace {

using PB = PolynomialBuilder;

bool greater_in(const Ring& r, const Monomial& a, const Monomial& b) {
  return r.compare(a, b) == std::strong_ordering::greater;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw UsageError("polynomial needs a ring");
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  if (!ring) throw UsageError("polynomial needs a ring");
  const Ring& r = *ring;
  const std::size_t nv = r.context().num_variables();
  for (const Term& t : terms) {
    auto fs = t.monomial.factors();
    if (!fs.empty() && fs.back().var >= nv) {
      throw UsageError("term uses a variable outside the ring");
    }
  }
  std::sort(terms.begin(), terms.end(),
            [&r](const Term& a, const Term& b) { return greater_in(r, a.monomial, b.monomial); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (Term& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff = r.field().add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
      t.coeff = r.field().normalize(t.coeff);
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
  return PB::adopt(std::move(ring), std::move(out));
}

Polynomial Polynomial::constant(RingPtr ring, const Coeff& c) {
  return monomial(std::move(ring), c, Monomial{});
}

Polynomial Polynomial::variable(RingPtr ring, VarIndex v) {
  ring->context().variable(v);  // range check
  return monomial(std::move(ring), Coeff(1), Monomial::var(v));
}

Polynomial Polynomial::monomial(RingPtr ring, const Coeff& c, Monomial m) {
  std::vector<Term> t;
  t.push_back({c, std::move(m)});
  return from_terms(std::move(ring), std::move(t));
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const Term& t : terms_) d = std::max(d, t.monomial.total_degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const Term& t : terms_) {
    if (t.monomial.total_degree() != terms_.front().monomial.total_degree()) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const Term& t : terms_) {
    Coeff c = t.coeff;
    const bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = (c == 1);
    if (!unit) out += c.get_str();
    if (!t.monomial.is_one()) {
      if (!unit) out += "*";
      out += ring_->format(t.monomial);
    } else if (unit) {
      out += "1";
    }
  }
  return out;
}

void require_same_ring(const Polynomial& f, const Polynomial& g) {
  if (f.ring_ptr() != g.ring_ptr() && !(f.ring() == g.ring())) {
    throw UsageError("polynomials belong to different rings");
  }
}

namespace {

// Merges f and c*m*g (m may be one, c may be negative).
Polynomial merge_add(const Polynomial& f, const Coeff& c, const Monomial& m, const Polynomial& g) {
  require_same_ring(f, g);
  const Ring& r = f.ring();
  const Field& k = r.field();
  auto ft = f.terms();
  auto gt = g.terms();
  std::vector<Term> out;
  out.reserve(ft.size() + gt.size());
  std::size_t i = 0, j = 0;
  Monomial gm;
  bool g_ready = false;
  auto load_g = [&] {
    if (!g_ready && j < gt.size()) {
      gm = m.is_one() ? gt[j].monomial : gt[j].monomial * m;
      g_ready = true;
    }
  };
  while (i < ft.size() || j < gt.size()) {
    load_g();
    std::strong_ordering cmp = std::strong_ordering::greater;
    if (i == ft.size()) {
      cmp = std::strong_ordering::less;
    } else if (j < gt.size()) {
      cmp = r.compare(ft[i].monomial, gm);
    }
    if (cmp == std::strong_ordering::greater) {
      out.push_back(ft[i++]);
    } else if (cmp == std::strong_ordering::less) {
      Coeff v = k.mul(c, gt[j].coeff);
      if (sgn(v) != 0) out.push_back({std::move(v), std::move(gm)});
      ++j;
      g_ready = false;
    } else {
      Coeff v = k.add(ft[i].coeff, k.mul(c, gt[j].coeff));
      if (sgn(v) != 0) out.push_back({std::move(v), std::move(gm)});
      ++i;
      ++j;
      g_ready = false;
    }
  }
  return PB::adopt(f.ring_ptr(), std::move(out));
}

}  // namespace

Polynomial add(const Polynomial& f, const Polynomial& g) {
  return merge_add(f, Coeff(1), Monomial{}, g);
}

Polynomial subtract(const Polynomial& f, const Polynomial& g) {
  return merge_add(f, f.ring().field().neg(Coeff(1)), Monomial{}, g);
}

Polynomial subtract_multiple(const Polynomial& f, const Coeff& c, const Monomial& m,
                             const Polynomial& g) {
  return merge_add(f, f.ring().field().neg(c), m, g);
}

Polynomial scale(const Polynomial& f, const Coeff& c) {
  const Field& k = f.ring().field();
  const Coeff cn = k.normalize(c);
  if (sgn(cn) == 0) return Polynomial(f.ring_ptr());
  std::vector<Term> out;
  out.reserve(f.size());
  for (const Term& t : f.terms()) out.push_back({k.mul(cn, t.coeff), t.monomial});
  return PB::adopt(f.ring_ptr(), std::move(out));
}

Polynomial multiply_term(const Polynomial& f, const Coeff& c, const Monomial& m) {
  const Field& k = f.ring().field();
  const Coeff cn = k.normalize(c);
  if (sgn(cn) == 0) return Polynomial(f.ring_ptr());
  std::vector<Term> out;
  out.reserve(f.size());
  // Multiplication by a monomial preserves the order of terms.
  for (const Term& t : f.terms()) out.push_back({k.mul(cn, t.coeff), t.monomial * m});
  return PB::adopt(f.ring_ptr(), std::move(out));
}

Polynomial multiply(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  std::vector<Term> prods;
  prods.reserve(f.size() * g.size());
  const Field& k = f.ring().field();
  for (const Term& a : f.terms()) {
    for (const Term& b : g.terms()) {
      prods.push_back({k.mul(a.coeff, b.coeff), a.monomial * b.monomial});
    }
  }
  return Polynomial::from_terms(f.ring_ptr(), std::move(prods));
}

std::optional<Term> leading_term(const Polynomial& f) {
  if (f.is_zero()) return std::nullopt;
  return f.terms().front();
}

Polynomial drop_leading_term(const Polynomial& f) {
  if (f.is_zero()) return f;
  auto t = f.terms();
  return PB::adopt(f.ring_ptr(), std::vector<Term>(t.begin() + 1, t.end()));
}

Polynomial make_monic(const Polynomial& f) {
  if (f.is_zero()) return f;
  return scale(f, f.ring().field().inv(f.terms().front().coeff));
}

}  // namespace aslforge
