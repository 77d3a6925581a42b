#include "aslforge/ring.hpp"

#include <regex>

#include "aslforge/errors.hpp"

namespace aslforge {

std::string to_string(const Variable& v) {
  if (v.is_y()) return "y_" + std::to_string(v.col);
  return "x_" + std::to_string(v.row) + "_" + std::to_string(v.col);
}

Variable parse_variable(const std::string& name) {
  static const std::regex x_re(R"(x_(\d+)_(\d+))");
  static const std::regex y_re(R"(y_(\d+))");
  std::smatch m;
  if (std::regex_match(name, m, x_re)) {
    return Variable::x(std::stoi(m[1].str()), std::stoi(m[2].str()));
  }
  if (std::regex_match(name, m, y_re)) {
    return Variable::y(std::stoi(m[1].str()));
  }
  throw UsageError("malformed variable name '" + name + "'");
}

RingContext RingContext::generic(int n, Field field) {
  return RingContext(n, false, std::move(field));
}

RingContext RingContext::symmetric(int n, Field field) {
  return RingContext(n, true, std::move(field));
}

RingContext::RingContext(int n, bool symmetric, Field field)
    : n_(n), symmetric_(symmetric), field_(std::move(field)) {
  if (n < 1) throw UsageError("matrix size n must be at least 1");
  const std::size_t side = static_cast<std::size_t>(n) + 1;
  x_index_.assign(side * side, -1);
  y_index_.assign(side, -1);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (symmetric && j < i) continue;
      x_index_[i * side + j] = static_cast<std::int32_t>(variables_.size());
      variables_.push_back(Variable::x(i, j));
    }
  }
  if (symmetric) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j < i; ++j) x_index_[i * side + j] = x_index_[j * side + i];
    }
  }
  for (int j = 1; j <= n; ++j) {
    y_index_[j] = static_cast<std::int32_t>(variables_.size());
    variables_.push_back(Variable::y(j));
  }
}

const Variable& RingContext::variable(VarIndex v) const {
  if (v >= variables_.size()) throw UsageError("variable index out of range");
  return variables_[v];
}

std::optional<VarIndex> RingContext::find(const Variable& v) const {
  if (v.col < 1 || v.col > n_) return std::nullopt;
  if (v.is_y()) return static_cast<VarIndex>(y_index_[v.col]);
  if (v.row < 1 || v.row > n_) return std::nullopt;
  if (symmetric_ && v.col < v.row) return std::nullopt;
  const std::int32_t idx = x_index_[v.row * (n_ + 1) + v.col];
  if (idx < 0) return std::nullopt;
  return static_cast<VarIndex>(idx);
}

VarIndex RingContext::x(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) {
    throw UsageError("x index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  }
  return static_cast<VarIndex>(x_index_[i * (n_ + 1) + j]);
}

VarIndex RingContext::y(int j) const {
  if (j < 1 || j > n_) throw UsageError("y index " + std::to_string(j) + " out of range");
  return static_cast<VarIndex>(y_index_[j]);
}

}  // namespace aslforge
