#include "aslforge/linalg.hpp"

namespace aslforge {

namespace {

// a - c * b, both sorted by column.
SparseRow axpy(const SparseRow& a, const Coeff& c, const SparseRow& b, const Field& k) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, k.neg(k.mul(c, b[j].second)));
      ++j;
    } else {
      Coeff v = k.sub(a[i].second, k.mul(c, b[j].second));
      if (sgn(v) != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

bool Echelon::insert(SparseRow row) {
  for (auto& e : row) e.second = field_.normalize(e.second);
  std::erase_if(row, [](const auto& e) { return sgn(e.second) == 0; });
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) {
      const Coeff inv = field_.inv(row.front().second);
      for (auto& e : row) e.second = field_.mul(e.second, inv);
      pivots_.emplace(row.front().first, std::move(row));
      return true;
    }
    const Coeff c = row.front().second;
    row = axpy(row, c, it->second, field_);
  }
  return false;
}

std::size_t rank(const std::vector<SparseRow>& rows, const Field& field) {
  Echelon e(field);
  for (const SparseRow& r : rows) e.insert(r);
  return e.rank();
}

}  // namespace aslforge
