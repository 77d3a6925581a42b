#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aslforge/field.hpp"

namespace aslforge {

using VarIndex = std::uint32_t;

/// An indeterminate x_ij (row i, column j) or y_j. Indices are 1-based;
/// `row` is 0 for y variables.
struct Variable {
  enum class Kind : std::uint8_t { X, Y };

  Kind kind = Kind::X;
  int row = 0;
  int col = 0;

  static Variable x(int i, int j) { return {Kind::X, i, j}; }
  static Variable y(int j) { return {Kind::Y, 0, j}; }

  bool is_x() const { return kind == Kind::X; }
  bool is_y() const { return kind == Kind::Y; }
  bool is_diagonal() const { return is_x() && row == col; }

  friend auto operator<=>(const Variable&, const Variable&) = default;
};

/// Canonical rendering: "x_i_j" or "y_j".
std::string to_string(const Variable& v);
/// Inverse of to_string. Throws UsageError on malformed names.
Variable parse_variable(const std::string& name);

/// The polynomial ring K[x_ij, y_j] for an n x n matrix X and an n x 1
/// column Y. The generic ring carries all n^2 + n variables, ordered
/// x_11, x_12, ..., x_nn, y_1, ..., y_n. The symmetric ring keeps only
/// x_ij with i <= j.
class RingContext {
 public:
  static RingContext generic(int n, Field field = Field::rationals());
  static RingContext symmetric(int n, Field field = Field::rationals());

  int n() const { return n_; }
  bool is_symmetric() const { return symmetric_; }
  const Field& field() const { return field_; }
  std::span<const Variable> variables() const { return variables_; }
  std::size_t num_variables() const { return variables_.size(); }
  const Variable& variable(VarIndex v) const;

  std::optional<VarIndex> find(const Variable& v) const;
  /// Index of x_ij; in a symmetric ring (i, j) and (j, i) map to one index.
  VarIndex x(int i, int j) const;
  VarIndex y(int j) const;

  friend bool operator==(const RingContext& a, const RingContext& b) {
    return a.n_ == b.n_ && a.symmetric_ == b.symmetric_ && a.field_ == b.field_;
  }

 private:
  RingContext(int n, bool symmetric, Field field);

  int n_ = 0;
  bool symmetric_ = false;
  Field field_;
  std::vector<Variable> variables_;
  // Dense (n+1) x (n+1) lookup for x, then n+1 slots for y; -1 = absent.
  std::vector<std::int32_t> x_index_;
  std::vector<std::int32_t> y_index_;
};

}  // namespace aslforge
