#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aslforge/groebner.hpp"
#include "aslforge/poset.hpp"

namespace aslforge {

/// Interpretation notes that accompany every poset built by build_poset.
const std::vector<std::string>& poset_interpretation_notes();

/// The generator poset H on the residues of x_ij and y_j. Element k is the
/// residue of variable k of RingContext::generic(n), so monomial variable
/// indices double as element indices. Relations, for n >= 2:
///   x_12 <= ... <= x_1n <= x_21 <= x_23 <= ... <= x_n,n-1 <= x_nn <= ... <= x_11
///   x_n,n-1 <= y_n <= ... <= y_1
///   x_22 <= y_1,  y_n <= x_n-1,n-1
///   x_i+1,i+1 <= y_i <= x_i-1,i-1   for 2 <= i <= n-1
/// n = 1 gives the antichain {x_11, y_1}.
Poset build_poset(int n, Execution exec = Execution::parallel);

/// True iff every two variables dividing m are comparable in P.
bool is_standard_monomial(const Monomial& m, const Poset& P);

/// Per-monomial flags for a batch, computed on the OpenMP pool when
/// exec == parallel.
struct MonomialClass {
  bool standard;
  bool normal;
};
std::vector<MonomialClass> classify_monomials(std::span<const Monomial> monomials, const Poset& P,
                                              const InitialIdeal& I, Execution exec = Execution::parallel);

struct StandardTerm {
  Coeff coeff;
  std::vector<VarIndex> factors;  // ascending in H
};

struct StraighteningRelation {
  VarIndex alpha;
  VarIndex beta;
  std::vector<StandardTerm> expansion;
};

/// Rewrites alpha*beta as its normal form modulo GB, with each monomial's
/// factors listed ascending in H. Throws StraighteningError when a term is
/// not a standard monomial.
StraighteningRelation straighten(VarIndex alpha, VarIndex beta, const GeneratorSet& GB, const Poset& P);
/// Straightening of x_ii * y_i.
StraighteningRelation straighten(int i, const GeneratorSet& GB, const Poset& P);

/// The expansion as a polynomial in GB's ring.
Polynomial expansion_polynomial(const StraighteningRelation& rel, const RingPtr& ring);

struct Axiom2Term {
  StandardTerm term;
  bool standard = false;
  VarIndex min_factor = 0;
  bool below_alpha = false;
  bool below_beta = false;
  std::vector<std::size_t> chain_to_alpha;
  std::vector<std::size_t> chain_to_beta;
};

struct Axiom2Pair {
  VarIndex alpha;
  VarIndex beta;
  std::vector<Axiom2Term> terms;
  bool identity_in_ideal = false;  // alpha*beta - expansion reduces to 0
  bool passed = false;
};

struct Axiom2Report {
  int n = 0;
  bool groebner_verified = false;
  std::vector<Axiom2Pair> pairs;
  bool passed = false;
};

/// Checks the straightening axiom on every incomparable pair of
/// build_poset(n). Failures are recorded, never thrown.
Axiom2Report verify_axiom2(int n, Field field = Field::rationals(), Execution exec = Execution::parallel);

struct Axiom1Degree {
  unsigned degree = 0;
  std::uint64_t monomials = 0;
  std::uint64_t standard = 0;
  std::uint64_t normal = 0;
  std::uint64_t formula = 0;
  bool standard_iff_normal = false;
  std::uint64_t ideal_rank = 0;      // dim of the ideal in this degree
  std::uint64_t projected_rank = 0;  // rank after dropping standard columns
  bool basis = false;                // standard monomials form a basis mod I
};

struct Axiom1Report {
  int n = 0;
  unsigned degree_bound = 0;
  std::vector<Axiom1Degree> degrees;
  std::vector<std::string> discrepancies;
  bool passed = false;
};

/// Degree-bounded check that standard monomials form a basis of S/I:
/// standard <=> normal for every monomial of degree <= d, plus a linear
/// algebra check on each graded slice that is independent of Groebner
/// reduction, plus agreement with standard_monomial_formula.
Axiom1Report verify_axiom1(int n, unsigned d, Field field = Field::rationals(),
                           Execution exec = Execution::parallel);

/// Standard monomials of degree exactly d, by enumeration.
std::uint64_t count_standard_monomials(int n, unsigned d, Execution exec = Execution::parallel);
/// Closed form: sum over s of (-1)^s C(n, s) C(d - 2s + N - 1, N - 1), N = n^2 + n.
std::uint64_t standard_monomial_formula(int n, unsigned d);

}  // namespace aslforge
