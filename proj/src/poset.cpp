#include "aslforge/poset.hpp"

#include <algorithm>
#include <deque>

#include "aslforge/errors.hpp"

namespace aslforge {

void BitMatrix::merge_row(std::size_t dst, std::size_t src) {
  std::uint64_t* d = row(dst);
  const std::uint64_t* s = row(src);
  for (std::size_t w = 0; w < words_; ++w) d[w] |= s[w];
}

BitMatrix transitive_closure(std::size_t n, const std::vector<ElementPair>& relations, Execution exec) {
  BitMatrix reach(n);
  for (std::size_t i = 0; i < n; ++i) reach.set(i, i);
  for (const auto& [a, b] : relations) {
    if (a >= n || b >= n) throw UsageError("relation references an element out of range");
    reach.set(a, b);
  }
  for (std::size_t k = 0; k < n; ++k) {
    // Row k is not modified while pivoting on k, so rows are independent.
    parallel::for_each_index(n, exec, [&](std::size_t i) {
      if (i != k && reach.test(i, k)) reach.merge_row(i, k);
    });
  }
  return reach;
}

Poset::Poset(std::vector<std::string> labels, std::vector<ElementPair> relations, Execution exec)
    : labels_(std::move(labels)), relations_(std::move(relations)) {
  closure_ = transitive_closure(labels_.size(), relations_, exec);
  if (!is_antisymmetric()) throw InternalError("poset relations contain a cycle");
  // Number of elements below a is a valid linear extension key.
  std::vector<std::size_t> below(size(), 0);
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) below[a] += leq(b, a) ? 1 : 0;
  }
  std::vector<std::size_t> order(size());
  for (std::size_t i = 0; i < size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&below](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  rank_.assign(size(), 0);
  for (std::size_t r = 0; r < order.size(); ++r) rank_[order[r]] = r;
}

bool Poset::is_antisymmetric() const {
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = a + 1; b < size(); ++b) {
      if (leq(a, b) && leq(b, a)) return false;
    }
  }
  return true;
}

bool Poset::is_transitive() const {
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) {
      if (!leq(a, b)) continue;
      for (std::size_t c = 0; c < size(); ++c) {
        if (leq(b, c) && !leq(a, c)) return false;
      }
    }
  }
  return true;
}

std::vector<ElementPair> Poset::covers() const {
  std::vector<ElementPair> out;
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) {
      if (a == b || !leq(a, b)) continue;
      bool between = false;
      for (std::size_t c = 0; c < size() && !between; ++c) {
        between = c != a && c != b && leq(a, c) && leq(c, b);
      }
      if (!between) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<std::size_t> Poset::witness_chain(std::size_t a, std::size_t b) const {
  if (!leq(a, b)) return {};
  // BFS over covers restricted to the interval [a, b].
  const auto hasse = covers();
  std::vector<std::size_t> parent(size(), size());
  std::deque<std::size_t> queue{a};
  parent[a] = a;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    if (u == b) break;
    for (const auto& [lo, hi] : hasse) {
      if (lo == u && parent[hi] == size() && leq(hi, b)) {
        parent[hi] = u;
        queue.push_back(hi);
      }
    }
  }
  std::vector<std::size_t> chain{b};
  while (chain.back() != a) chain.push_back(parent[chain.back()]);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

std::vector<ElementPair> incomparable_pairs(const Poset& p) {
  std::vector<ElementPair> out;
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = a + 1; b < p.size(); ++b) {
      if (!p.comparable(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

}  // namespace aslforge
