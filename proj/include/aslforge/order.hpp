#pragma once

#include <compare>
#include <vector>

#include "aslforge/monomial.hpp"
#include "aslforge/ring.hpp"

namespace aslforge {

/// Block elimination order on K[x_ij, y_j]:
///   1. lex on the diagonal block x_11 > x_22 > ... > x_nn;
///   2. ties broken by graded reverse lex on every other variable, with
///      single-variable order x_12 < x_13 < ... < x_n,n-1 < y_1 < ... < y_n.
/// Every diagonal variable beats every monomial in the tail block.
class MonomialOrder {
 public:
  std::size_t num_variables() const { return diag_pos_.size(); }
  const std::vector<VarIndex>& diagonal_block() const { return diagonal_; }
  /// Tail variables, smallest first.
  const std::vector<VarIndex>& tail_block() const { return tail_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  friend MonomialOrder build_order(const RingContext& ctx);

  std::vector<VarIndex> diagonal_;
  std::vector<VarIndex> tail_;
  std::vector<int> diag_pos_;  // -1 for tail variables
  std::vector<int> tail_pos_;  // -1 for diagonal variables
};

MonomialOrder build_order(const RingContext& ctx);

inline std::strong_ordering compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
  return ord.compare(a, b);
}

}  // namespace aslforge
