#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "aslforge/parallel.hpp"

namespace aslforge {

/// Reachability matrix stored as packed bit rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const { return n_; }
  bool test(std::size_t r, std::size_t c) const { return (row(r)[c / 64] >> (c % 64)) & 1u; }
  void set(std::size_t r, std::size_t c) { row(r)[c / 64] |= std::uint64_t{1} << (c % 64); }
  /// row(dst) |= row(src)
  void merge_row(std::size_t dst, std::size_t src);

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::uint64_t* row(std::size_t r) { return bits_.data() + r * words_; }
  const std::uint64_t* row(std::size_t r) const { return bits_.data() + r * words_; }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Reflexive-transitive closure of a relation on n elements (Warshall).
/// The parallel path splits the row updates of each pivot over threads.
BitMatrix transitive_closure(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& relations,
                             Execution exec = Execution::parallel);

using ElementPair = std::pair<std::size_t, std::size_t>;

/// Finite poset given by generating relations a <= b. The closure is
/// computed on construction; a cycle throws InternalError.
class Poset {
 public:
  Poset(std::vector<std::string> labels, std::vector<ElementPair> relations,
        Execution exec = Execution::parallel);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// The generating relations as given.
  const std::vector<ElementPair>& relations() const { return relations_; }
  const BitMatrix& closure() const { return closure_; }

  bool leq(std::size_t a, std::size_t b) const { return closure_.test(a, b); }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }

  /// Hasse diagram: a < b with nothing strictly between. Sorted.
  std::vector<ElementPair> covers() const;
  /// Rank of each element in a fixed linear extension (ties by index).
  const std::vector<std::size_t>& linear_extension_rank() const { return rank_; }
  /// Chain of covers a = c_0 < c_1 < ... < c_k = b, empty unless a <= b.
  std::vector<std::size_t> witness_chain(std::size_t a, std::size_t b) const;

  bool is_antisymmetric() const;
  bool is_transitive() const;

 private:
  std::vector<std::string> labels_;
  std::vector<ElementPair> relations_;
  BitMatrix closure_;
  std::vector<std::size_t> rank_;
};

/// Unordered incomparable pairs (a, b) with a < b by index, sorted.
std::vector<ElementPair> incomparable_pairs(const Poset& p);

}  // namespace aslforge
