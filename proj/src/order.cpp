#include "aslforge/order.hpp"

#include <limits>

#include "aslforge/errors.hpp"

namespace aslforge {

MonomialOrder build_order(const RingContext& ctx) {
  MonomialOrder ord;
  const std::size_t nv = ctx.num_variables();
  ord.diag_pos_.assign(nv, -1);
  ord.tail_pos_.assign(nv, -1);
  for (int i = 1; i <= ctx.n(); ++i) {
    const VarIndex v = ctx.x(i, i);
    ord.diag_pos_[v] = static_cast<int>(ord.diagonal_.size());
    ord.diagonal_.push_back(v);
  }
  // Variable list is already x (row-major) then y, which is the tail order.
  for (VarIndex v = 0; v < nv; ++v) {
    if (ord.diag_pos_[v] >= 0) continue;
    ord.tail_pos_[v] = static_cast<int>(ord.tail_.size());
    ord.tail_.push_back(v);
  }
  return ord;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  auto fa = a.factors();
  auto fb = b.factors();
  const std::size_t nv = diag_pos_.size();
  if ((!fa.empty() && fa.back().var >= nv) || (!fb.empty() && fb.back().var >= nv)) {
    throw UsageError("monomial uses a variable outside the order's ring");
  }

  // Single merge pass over both supports: track the first differing diagonal
  // position and the smallest differing tail position.
  constexpr int kNone = std::numeric_limits<int>::max();
  int diag_first = kNone;
  std::strong_ordering diag_cmp = std::strong_ordering::equal;
  int tail_first = kNone;
  std::strong_ordering tail_cmp = std::strong_ordering::equal;
  long tail_deg_a = 0;
  long tail_deg_b = 0;

  auto visit = [&](VarIndex v, Exponent ea, Exponent eb) {
    if (diag_pos_[v] >= 0) {
      if (ea != eb && diag_pos_[v] < diag_first) {
        diag_first = diag_pos_[v];
        diag_cmp = ea <=> eb;
      }
    } else {
      tail_deg_a += ea;
      tail_deg_b += eb;
      if (ea != eb && tail_pos_[v] < tail_first) {
        tail_first = tail_pos_[v];
        // Reverse lex: the smaller exponent in the smallest variable wins.
        tail_cmp = eb <=> ea;
      }
    }
  };

  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && fa[i].var < fb[j].var)) {
      visit(fa[i].var, fa[i].exp, 0);
      ++i;
    } else if (i == fa.size() || fb[j].var < fa[i].var) {
      visit(fb[j].var, 0, fb[j].exp);
      ++j;
    } else {
      visit(fa[i].var, fa[i].exp, fb[j].exp);
      ++i;
      ++j;
    }
  }

  if (diag_first != kNone) return diag_cmp;
  if (tail_deg_a != tail_deg_b) return tail_deg_a <=> tail_deg_b;
  return tail_cmp;
}

}  // namespace aslforge
