#include "aslforge/matrix_ideal.hpp"

#include "aslforge/errors.hpp"

namespace aslforge {

std::string to_string(PatternKind k) {
  switch (k) {
    case PatternKind::generic: return "generic";
    case PatternKind::symmetric: return "symmetric";
    case PatternKind::zero_pattern: return "zero_pattern";
  }
  return "unknown";
}

MatrixPattern MatrixPattern::zero_pattern(std::vector<std::vector<bool>> mask) {
  MatrixPattern p{static_cast<int>(mask.size()), PatternKind::zero_pattern, std::move(mask)};
  p.validate();
  return p;
}

void MatrixPattern::validate() const {
  if (n < 1) throw UsageError("matrix size n must be at least 1");
  if (kind != PatternKind::zero_pattern) return;
  if (mask.size() != static_cast<std::size_t>(n)) {
    throw UsageError("mask has " + std::to_string(mask.size()) + " rows, expected " + std::to_string(n));
  }
  for (const auto& row : mask) {
    if (row.size() != static_cast<std::size_t>(n)) {
      throw UsageError("mask row has " + std::to_string(row.size()) + " entries, expected " +
                       std::to_string(n));
    }
  }
}

bool MatrixPattern::keeps_diagonal() const {
  if (kind != PatternKind::zero_pattern) return true;
  for (int i = 0; i < n; ++i) {
    if (!mask[i][i]) return false;
  }
  return true;
}

RingPtr ring_for(const MatrixPattern& p, Field field) {
  p.validate();
  return Ring::make(p.kind == PatternKind::symmetric ? RingContext::symmetric(p.n, std::move(field))
                                                     : RingContext::generic(p.n, std::move(field)));
}

MatrixPair build_matrices(const MatrixPattern& p, const RingPtr& ring) {
  p.validate();
  const RingContext& ctx = ring->context();
  if (ctx.n() != p.n) throw UsageError("ring size does not match pattern size");
  if (ctx.is_symmetric() != (p.kind == PatternKind::symmetric)) {
    throw UsageError("symmetric patterns need the symmetric ring and vice versa");
  }
  const auto n = static_cast<std::size_t>(p.n);
  MatrixPair out;
  out.x.rows = out.x.cols = n;
  out.y.rows = n;
  out.y.cols = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool present = p.kind != PatternKind::zero_pattern || p.mask[i][j];
      const int r = static_cast<int>(i) + 1;
      const int c = static_cast<int>(j) + 1;
      out.x.entries.push_back(present ? Polynomial::variable(ring, ctx.x(r, c)) : Polynomial(ring));
    }
    out.y.entries.push_back(Polynomial::variable(ring, ctx.y(static_cast<int>(i) + 1)));
  }
  return out;
}

std::vector<Polynomial> product_generators(const SymbolicMatrix& x, const SymbolicMatrix& y) {
  if (x.cols != y.rows || y.cols != 1 || x.entries.empty()) {
    throw UsageError("product_generators expects an n x n matrix and an n x 1 column");
  }
  std::vector<Polynomial> gens;
  gens.reserve(x.rows);
  for (std::size_t i = 0; i < x.rows; ++i) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < x.cols; ++j) {
      const Polynomial prod = multiply(x.at(i, j), y.at(j, 0));
      terms.insert(terms.end(), prod.terms().begin(), prod.terms().end());
    }
    gens.push_back(Polynomial::from_terms(x.entries.front().ring_ptr(), std::move(terms)));
  }
  return gens;
}

std::vector<Polynomial> ideal_generators(const MatrixPattern& p, const RingPtr& ring) {
  const MatrixPair m = build_matrices(p, ring);
  return product_generators(m.x, m.y);
}

}  // namespace aslforge
