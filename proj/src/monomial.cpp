#include "aslforge/monomial.hpp"

#include <algorithm>

namespace aslforge {

Monomial::Monomial(std::initializer_list<Factor> factors)
    : Monomial(from_factors(std::vector<Factor>(factors))) {}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.var < b.var; });
  Monomial m;
  for (const Factor& f : factors) {
    if (f.exp == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().var == f.var) {
      m.factors_.back().exp += f.exp;
    } else {
      m.factors_.push_back(f);
    }
    m.degree_ += f.exp;
  }
  return m;
}

Monomial Monomial::var(VarIndex v, Exponent e) {
  Monomial m;
  if (e > 0) {
    m.factors_.push_back({v, e});
    m.degree_ = e;
  }
  return m;
}

Exponent Monomial::exponent(VarIndex v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, VarIndex x) { return f.var < x; });
  return (it != factors_.end() && it->var == v) ? it->exp : 0;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  auto it = other.factors_.begin();
  for (const Factor& f : factors_) {
    while (it != other.factors_.end() && it->var < f.var) ++it;
    if (it == other.factors_.end() || it->var != f.var || it->exp < f.exp) return false;
  }
  return true;
}

std::optional<Monomial> Monomial::divide(const Monomial& divisor) const {
  if (!divisor.divides(*this)) return std::nullopt;
  Monomial q;
  auto d = divisor.factors_.begin();
  for (const Factor& f : factors_) {
    Exponent e = f.exp;
    if (d != divisor.factors_.end() && d->var == f.var) {
      e -= d->exp;
      ++d;
    }
    if (e > 0) q.factors_.push_back({f.var, e});
  }
  q.degree_ = degree_ - divisor.degree_;
  return q;
}

namespace {

template <typename Combine>
Monomial merge(const Monomial& a, const Monomial& b, Combine combine) {
  std::vector<Factor> out;
  auto fa = a.factors();
  auto fb = b.factors();
  out.reserve(fa.size() + fb.size());
  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && fa[i].var < fb[j].var)) {
      out.push_back(fa[i++]);
    } else if (i == fa.size() || fb[j].var < fa[i].var) {
      out.push_back(fb[j++]);
    } else {
      out.push_back({fa[i].var, combine(fa[i].exp, fb[j].exp)});
      ++i;
      ++j;
    }
  }
  return Monomial::from_factors(std::move(out));
}

}  // namespace

Monomial operator*(const Monomial& a, const Monomial& b) {
  return merge(a, b, [](Exponent x, Exponent y) { return x + y; });
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  return merge(a, b, [](Exponent x, Exponent y) { return std::max(x, y); });
}

bool coprime(const Monomial& a, const Monomial& b) {
  auto fa = a.factors();
  auto fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].var == fb[j].var) return false;
    if (fa[i].var < fb[j].var) ++i; else ++j;
  }
  return true;
}

std::vector<VarIndex> Monomial::expanded() const {
  std::vector<VarIndex> out;
  out.reserve(degree_);
  for (const Factor& f : factors_) out.insert(out.end(), f.exp, f.var);
  return out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (const Factor& f : m.factors()) {
    h ^= (static_cast<std::size_t>(f.var) << 32) | f.exp;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace aslforge
