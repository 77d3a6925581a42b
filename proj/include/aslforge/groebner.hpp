#pragma once

#include <span>
#include <string>
#include <vector>

#include "aslforge/parallel.hpp"
#include "aslforge/polynomial.hpp"

namespace aslforge {

/// Nonzero polynomials over one ring, generating an ideal.
class GeneratorSet {
 public:
  /// Throws UsageError on a zero polynomial or mixed rings.
  GeneratorSet(RingPtr ring, std::vector<Polynomial> gens);
  /// Same, but silently drops zero polynomials.
  static GeneratorSet nonzero(RingPtr ring, std::vector<Polynomial> gens);

  const RingPtr& ring_ptr() const { return ring_; }
  const Ring& ring() const { return *ring_; }
  std::span<const Polynomial> gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }
  const Polynomial& operator[](std::size_t i) const { return gens_[i]; }
  const Monomial& leading_monomial(std::size_t i) const { return gens_[i].terms().front().monomial; }

  friend bool operator==(const GeneratorSet& a, const GeneratorSet& b) { return a.gens_ == b.gens_; }

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

struct DivisionResult {
  std::vector<Polynomial> quotients;  // one per generator
  Polynomial remainder;
};

/// Multivariate division with full tail reduction. The divisor for each
/// step is the first generator (by index) whose leading monomial divides
/// the current leading monomial. f == sum(quotients[k] * G[k]) + remainder.
DivisionResult divide(const Polynomial& f, const GeneratorSet& G);
/// Remainder of divide(f, G) without building quotients.
Polynomial reduce(const Polynomial& f, const GeneratorSet& G);

/// Reduces every input against G; the parallel path distributes inputs
/// over the OpenMP pool. Output order matches input order.
std::vector<Polynomial> reduce_batch(std::span<const Polynomial> inputs, const GeneratorSet& G,
                                     Execution exec = Execution::parallel);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

enum class PairCriterion { coprime, reduced };

std::string to_string(PairCriterion c);

struct PairRecord {
  std::size_t i;  // 0-based generator indices, i < j
  std::size_t j;
  PairCriterion criterion;
  bool remainder_zero;
};

struct GroebnerCertificate {
  bool is_groebner = true;
  std::vector<PairRecord> pairs;
  std::vector<Polynomial> basis;

  /// Number of pairs that needed an explicit reduction.
  std::size_t reductions() const;
};

/// Checks every S-pair of G. Pairs with coprime leading monomials are
/// dismissed by Buchberger's first criterion; the rest are reduced.
GroebnerCertificate is_groebner(const GeneratorSet& G, Execution exec = Execution::parallel);

/// Reduced Groebner basis of <G>: monic, auto-reduced, sorted by
/// decreasing leading monomial.
///
/// Pairs are processed by the normal strategy (smallest lcm degree first,
/// ties by generator index) with the coprime criterion. The parallel path
/// reduces all pairs of the current minimal degree concurrently against a
/// snapshot of the basis, then merges the remainders in pair order. The
/// serial path handles one pair at a time. Both return the same basis.
GeneratorSet buchberger(const GeneratorSet& G, Execution exec = Execution::parallel);

/// Turns a Groebner basis into the reduced one.
GeneratorSet reduce_basis(const GeneratorSet& G);

/// Minimal monomial generators of a monomial ideal, sorted by decreasing
/// order.
class InitialIdeal {
 public:
  InitialIdeal(RingPtr ring, std::vector<Monomial> gens);

  std::span<const Monomial> generators() const { return gens_; }
  const Ring& ring() const { return *ring_; }
  bool contains(const Monomial& m) const;

 private:
  RingPtr ring_;
  std::vector<Monomial> gens_;
};

/// Leading-term ideal of <G>. Re-verifies G with is_groebner and throws
/// NotGroebnerError if it is not a Groebner basis.
InitialIdeal initial_ideal(const GeneratorSet& G, Execution exec = Execution::parallel);

/// True iff no generator of I divides m.
bool is_normal_monomial(const Monomial& m, const InitialIdeal& I);

}  // namespace aslforge
