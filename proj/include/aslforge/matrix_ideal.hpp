#pragma once

#include <string>
#include <vector>

#include "aslforge/polynomial.hpp"

namespace aslforge {

enum class PatternKind { generic, symmetric, zero_pattern };

std::string to_string(PatternKind k);

/// Shape of the n x n matrix X. For zero patterns, mask[i][j] is true
/// where X carries the indeterminate x_(i+1)(j+1) and false where it is 0.
struct MatrixPattern {
  int n = 1;
  PatternKind kind = PatternKind::generic;
  std::vector<std::vector<bool>> mask;

  static MatrixPattern generic(int n) { return {n, PatternKind::generic, {}}; }
  static MatrixPattern symmetric(int n) { return {n, PatternKind::symmetric, {}}; }
  /// Throws UsageError unless mask is n x n.
  static MatrixPattern zero_pattern(std::vector<std::vector<bool>> mask);

  /// Throws UsageError on n < 1 or a malformed mask.
  void validate() const;
  /// True unless a zero pattern masks out some diagonal entry.
  bool keeps_diagonal() const;
};

/// Ring that matches the pattern: the symmetric ring for symmetric X,
/// the generic ring otherwise.
RingPtr ring_for(const MatrixPattern& p, Field field = Field::rationals());

/// Matrix whose entries are single variables or zero.
struct SymbolicMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Polynomial> entries;  // row-major

  const Polynomial& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

struct MatrixPair {
  SymbolicMatrix x;
  SymbolicMatrix y;
};

/// X according to the pattern, Y the generic column (y_1, ..., y_n)^T.
/// Throws UsageError when ring and pattern disagree.
MatrixPair build_matrices(const MatrixPattern& p, const RingPtr& ring);

/// Entries g_1, ..., g_n of XY. Entries may be zero for degenerate masks.
std::vector<Polynomial> product_generators(const SymbolicMatrix& x, const SymbolicMatrix& y);

/// Convenience: build_matrices followed by product_generators.
std::vector<Polynomial> ideal_generators(const MatrixPattern& p, const RingPtr& ring);

}  // namespace aslforge
