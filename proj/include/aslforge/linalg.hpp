#pragma once

#include <map>
#include <utility>
#include <vector>

#include "aslforge/field.hpp"

namespace aslforge {

/// Sparse vector: (column, nonzero value), strictly increasing columns.
using SparseRow = std::vector<std::pair<std::size_t, Coeff>>;

/// Incremental row echelon form over a field. Rows are reduced on
/// insertion against pivots keyed by leading column.
class Echelon {
 public:
  explicit Echelon(Field field) : field_(std::move(field)) {}

  /// Returns true when the row was independent of the rows seen so far.
  bool insert(SparseRow row);
  std::size_t rank() const { return pivots_.size(); }

 private:
  Field field_;
  std::map<std::size_t, SparseRow> pivots_;  // leading coefficient is 1
};

/// Rank of a list of sparse rows.
std::size_t rank(const std::vector<SparseRow>& rows, const Field& field);

}  // namespace aslforge
