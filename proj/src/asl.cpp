#include "aslforge/asl.hpp"

#include <algorithm>
#include <unordered_map>

#include <gmpxx.h>

#include "aslforge/enumerate.hpp"
#include "aslforge/errors.hpp"
#include "aslforge/linalg.hpp"
#include "aslforge/matrix_ideal.hpp"

namespace aslforge {

const std::vector<std::string>& poset_interpretation_notes() {
  static const std::vector<std::string> notes = {
      "chain (5) 'x_(i+1),(i+1) y_i <= x_(i-1),(i-1)' is read as the two relations "
      "x_(i+1),(i+1) <= y_i and y_i <= x_(i-1),(i-1) for 2 <= i <= n-1",
      "chains are treated as generating relations; covers are the transitive reduction",
  };
  return notes;
}

Poset build_poset(int n, Execution exec) {
  const RingContext ctx = RingContext::generic(n);
  std::vector<std::string> labels;
  for (const Variable& v : ctx.variables()) labels.push_back(to_string(v));

  std::vector<ElementPair> rel;
  auto chain = [&rel](const std::vector<VarIndex>& seq) {
    for (std::size_t k = 0; k + 1 < seq.size(); ++k) rel.emplace_back(seq[k], seq[k + 1]);
  };

  if (n >= 2) {
    std::vector<VarIndex> c1;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i != j) c1.push_back(ctx.x(i, j));
      }
    }
    for (int i = n; i >= 1; --i) c1.push_back(ctx.x(i, i));
    chain(c1);

    std::vector<VarIndex> c2{ctx.x(n, n - 1)};
    for (int j = n; j >= 1; --j) c2.push_back(ctx.y(j));
    chain(c2);

    chain({ctx.x(2, 2), ctx.y(1)});
    chain({ctx.y(n), ctx.x(n - 1, n - 1)});
    for (int i = 2; i <= n - 1; ++i) chain({ctx.x(i + 1, i + 1), ctx.y(i), ctx.x(i - 1, i - 1)});
  }
  return Poset(std::move(labels), std::move(rel), exec);
}

bool is_standard_monomial(const Monomial& m, const Poset& P) {
  auto fs = m.factors();
  for (std::size_t a = 0; a < fs.size(); ++a) {
    if (fs[a].var >= P.size()) throw UsageError("monomial variable outside the poset");
    for (std::size_t b = a + 1; b < fs.size(); ++b) {
      if (!P.comparable(fs[a].var, fs[b].var)) return false;
    }
  }
  return true;
}

std::vector<MonomialClass> classify_monomials(std::span<const Monomial> monomials, const Poset& P,
                                              const InitialIdeal& I, Execution exec) {
  std::vector<MonomialClass> out(monomials.size());
  parallel::for_each_index(monomials.size(), exec, [&](std::size_t k) {
    out[k] = {is_standard_monomial(monomials[k], P), is_normal_monomial(monomials[k], I)};
  });
  return out;
}

namespace {

std::vector<VarIndex> sorted_factors(const Monomial& m, const Poset& P) {
  std::vector<VarIndex> f = m.expanded();
  const auto& rank = P.linear_extension_rank();
  std::stable_sort(f.begin(), f.end(), [&rank](VarIndex a, VarIndex b) { return rank[a] < rank[b]; });
  return f;
}

struct RawStraightening {
  StraighteningRelation rel;
  std::vector<bool> standard;
};

RawStraightening normal_form_expansion(VarIndex alpha, VarIndex beta, const GeneratorSet& GB,
                                       const Poset& P) {
  const RingPtr& ring = GB.ring_ptr();
  const Polynomial product = Polynomial::monomial(ring, Coeff(1), Monomial::var(alpha) * Monomial::var(beta));
  const Polynomial nf = reduce(product, GB);
  RawStraightening out{{alpha, beta, {}}, {}};
  for (const Term& t : nf.terms()) {
    out.rel.expansion.push_back({t.coeff, sorted_factors(t.monomial, P)});
    out.standard.push_back(is_standard_monomial(t.monomial, P));
  }
  return out;
}

}  // namespace

StraighteningRelation straighten(VarIndex alpha, VarIndex beta, const GeneratorSet& GB, const Poset& P) {
  RawStraightening raw = normal_form_expansion(alpha, beta, GB, P);
  for (std::size_t k = 0; k < raw.standard.size(); ++k) {
    if (!raw.standard[k]) {
      throw StraighteningError("straightening term " + std::to_string(k) + " is not a standard monomial");
    }
  }
  return std::move(raw.rel);
}

StraighteningRelation straighten(int i, const GeneratorSet& GB, const Poset& P) {
  const RingContext& ctx = GB.ring().context();
  if (i < 1 || i > ctx.n()) throw UsageError("straighten: index out of range");
  return straighten(ctx.x(i, i), ctx.y(i), GB, P);
}

Polynomial expansion_polynomial(const StraighteningRelation& rel, const RingPtr& ring) {
  std::vector<Term> terms;
  for (const StandardTerm& t : rel.expansion) {
    std::vector<Factor> f;
    for (VarIndex v : t.factors) f.push_back({v, 1});
    terms.push_back({t.coeff, Monomial::from_factors(std::move(f))});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

Axiom2Report verify_axiom2(int n, Field field, Execution exec) {
  Axiom2Report report;
  report.n = n;
  const MatrixPattern pattern = MatrixPattern::generic(n);
  const RingPtr ring = ring_for(pattern, std::move(field));
  const GeneratorSet G = GeneratorSet::nonzero(ring, ideal_generators(pattern, ring));
  report.groebner_verified = is_groebner(G, exec).is_groebner;
  const Poset P = build_poset(n, exec);

  const auto pairs = incomparable_pairs(P);
  report.pairs.resize(pairs.size());
  parallel::for_each_index(pairs.size(), exec, [&](std::size_t k) {
    const auto [a, b] = pairs[k];
    const auto alpha = static_cast<VarIndex>(a);
    const auto beta = static_cast<VarIndex>(b);
    RawStraightening raw = normal_form_expansion(alpha, beta, G, P);
    Axiom2Pair& out = report.pairs[k];
    out.alpha = alpha;
    out.beta = beta;
    bool ok = true;
    for (std::size_t t = 0; t < raw.rel.expansion.size(); ++t) {
      Axiom2Term term;
      term.term = raw.rel.expansion[t];
      term.standard = raw.standard[t];
      term.min_factor = term.term.factors.front();
      term.below_alpha = P.leq(term.min_factor, alpha);
      term.below_beta = P.leq(term.min_factor, beta);
      term.chain_to_alpha = P.witness_chain(term.min_factor, alpha);
      term.chain_to_beta = P.witness_chain(term.min_factor, beta);
      ok = ok && term.standard && term.below_alpha && term.below_beta;
      out.terms.push_back(std::move(term));
    }
    const Polynomial product = Polynomial::monomial(ring, Coeff(1), Monomial::var(alpha) * Monomial::var(beta));
    out.identity_in_ideal = reduce(subtract(product, expansion_polynomial(raw.rel, ring)), G).is_zero();
    out.passed = ok && out.identity_in_ideal;
  });
  report.passed = report.groebner_verified &&
                  std::all_of(report.pairs.begin(), report.pairs.end(), [](const Axiom2Pair& p) { return p.passed; });
  return report;
}

std::uint64_t standard_monomial_formula(int n, unsigned d) {
  const unsigned long vars = static_cast<unsigned long>(n) * n + n;
  mpz_class total = 0;
  for (int s = 0; s <= n && 2u * s <= d; ++s) {
    mpz_class choose_s, slice;
    mpz_bin_uiui(choose_s.get_mpz_t(), n, s);
    mpz_bin_uiui(slice.get_mpz_t(), d - 2u * s + vars - 1, vars - 1);
    if (s % 2 == 0) total += choose_s * slice; else total -= choose_s * slice;
  }
  if (!total.fits_ulong_p()) throw UsageError("standard monomial count overflows 64 bits");
  return total.get_ui();
}

std::uint64_t count_standard_monomials(int n, unsigned d, Execution exec) {
  const Poset P = build_poset(n, exec);
  const auto monomials = monomials_of_degree(P.size(), d);
  std::vector<char> standard(monomials.size(), 0);
  parallel::for_each_index(monomials.size(), exec,
                           [&](std::size_t k) { standard[k] = is_standard_monomial(monomials[k], P); });
  return static_cast<std::uint64_t>(std::count(standard.begin(), standard.end(), 1));
}

Axiom1Report verify_axiom1(int n, unsigned d, Field field, Execution exec) {
  Axiom1Report report;
  report.n = n;
  report.degree_bound = d;
  const MatrixPattern pattern = MatrixPattern::generic(n);
  const RingPtr ring = ring_for(pattern, field);
  const auto gens = ideal_generators(pattern, ring);
  const GeneratorSet G = GeneratorSet::nonzero(ring, gens);
  const InitialIdeal in = initial_ideal(G, exec);
  const Poset P = build_poset(n, exec);
  const std::size_t nv = ring->context().num_variables();

  bool ok = true;
  for (unsigned k = 0; k <= d; ++k) {
    Axiom1Degree deg;
    deg.degree = k;
    const auto monomials = monomials_of_degree(nv, k);
    const auto classes = classify_monomials(monomials, P, in, exec);
    deg.monomials = monomials.size();
    deg.standard_iff_normal = true;
    std::unordered_map<Monomial, std::size_t, MonomialHash> column;
    std::vector<bool> is_standard(monomials.size());
    for (std::size_t c = 0; c < monomials.size(); ++c) {
      column.emplace(monomials[c], c);
      is_standard[c] = classes[c].standard;
      deg.standard += classes[c].standard;
      deg.normal += classes[c].normal;
      if (classes[c].standard != classes[c].normal) {
        deg.standard_iff_normal = false;
        report.discrepancies.push_back(ring->format(monomials[c]) +
                                       (classes[c].standard ? ": standard but not normal"
                                                            : ": normal but not standard"));
      }
    }
    deg.formula = standard_monomial_formula(n, k);

    // The generators are homogeneous of degree 2, so the degree-k slice of
    // the ideal is spanned by m * g_i with deg m = k - 2.
    Echelon full(field);
    Echelon projected(field);
    if (k >= 2) {
      for (const Monomial& m : monomials_of_degree(nv, k - 2)) {
        for (const Polynomial& g : gens) {
          SparseRow row;
          SparseRow proj;
          for (const Term& t : g.terms()) {
            const std::size_t c = column.at(t.monomial * m);
            row.emplace_back(c, t.coeff);
            if (!is_standard[c]) proj.emplace_back(c, t.coeff);
          }
          auto by_col = [](const auto& a, const auto& b) { return a.first < b.first; };
          std::sort(row.begin(), row.end(), by_col);
          std::sort(proj.begin(), proj.end(), by_col);
          full.insert(std::move(row));
          projected.insert(std::move(proj));
        }
      }
    }
    deg.ideal_rank = full.rank();
    deg.projected_rank = projected.rank();
    const std::uint64_t nonstandard = deg.monomials - deg.standard;
    deg.basis = deg.ideal_rank == nonstandard && deg.projected_rank == deg.ideal_rank;
    ok = ok && deg.standard_iff_normal && deg.basis && deg.standard == deg.formula;
    report.degrees.push_back(deg);
  }
  report.passed = ok;
  return report;
}

}  // namespace aslforge
