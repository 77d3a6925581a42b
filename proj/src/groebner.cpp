#include "aslforge/groebner.hpp"

#include <algorithm>
#include <optional>

#include "aslforge/errors.hpp"

namespace aslforge {

GeneratorSet::GeneratorSet(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)) {
  if (!ring_) throw UsageError("generator set needs a ring");
  for (const Polynomial& g : gens_) {
    if (g.is_zero()) throw UsageError("generator set may not contain the zero polynomial");
    if (!(g.ring() == *ring_)) throw UsageError("generators belong to different rings");
  }
}

GeneratorSet GeneratorSet::nonzero(RingPtr ring, std::vector<Polynomial> gens) {
  std::erase_if(gens, [](const Polynomial& g) { return g.is_zero(); });
  return GeneratorSet(std::move(ring), std::move(gens));
}

namespace {

std::optional<std::size_t> find_divisor(const Monomial& m, std::span<const Polynomial> gens) {
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].terms().front().monomial.divides(m)) return k;
  }
  return std::nullopt;
}

Polynomial reduce_against(const Polynomial& f, std::span<const Polynomial> gens,
                          std::vector<std::vector<Term>>* quotients) {
  const Field& k = f.ring().field();
  Polynomial p = f;
  std::vector<Term> rem;
  while (!p.is_zero()) {
    const Term& lt = p.terms().front();
    if (auto d = find_divisor(lt.monomial, gens)) {
      const Term& glt = gens[*d].terms().front();
      Coeff c = k.div(lt.coeff, glt.coeff);
      Monomial m = *lt.monomial.divide(glt.monomial);
      if (quotients) (*quotients)[*d].push_back({c, m});
      p = subtract_multiple(p, c, m, gens[*d]);
    } else {
      rem.push_back(lt);
      p = drop_leading_term(p);
    }
  }
  return Polynomial::from_terms(f.ring_ptr(), std::move(rem));
}

}  // namespace

DivisionResult divide(const Polynomial& f, const GeneratorSet& G) {
  if (!G.empty()) require_same_ring(f, G[0]);
  std::vector<std::vector<Term>> q(G.size());
  Polynomial r = reduce_against(f, G.gens(), &q);
  DivisionResult out{{}, std::move(r)};
  out.quotients.reserve(G.size());
  for (auto& terms : q) out.quotients.push_back(Polynomial::from_terms(f.ring_ptr(), std::move(terms)));
  return out;
}

Polynomial reduce(const Polynomial& f, const GeneratorSet& G) {
  if (!G.empty()) require_same_ring(f, G[0]);
  return reduce_against(f, G.gens(), nullptr);
}

std::vector<Polynomial> reduce_batch(std::span<const Polynomial> inputs, const GeneratorSet& G,
                                     Execution exec) {
  std::vector<std::optional<Polynomial>> slots(inputs.size());
  parallel::for_each_index(inputs.size(), exec,
                           [&](std::size_t i) { slots[i] = reduce(inputs[i], G); });
  std::vector<Polynomial> out;
  out.reserve(inputs.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  if (f.is_zero() || g.is_zero()) throw UsageError("s_polynomial needs nonzero inputs");
  const Field& k = f.ring().field();
  const Term& ft = f.terms().front();
  const Term& gt = g.terms().front();
  const Monomial l = lcm(ft.monomial, gt.monomial);
  Polynomial a = multiply_term(f, k.inv(ft.coeff), *l.divide(ft.monomial));
  return subtract_multiple(a, k.inv(gt.coeff), *l.divide(gt.monomial), g);
}

std::string to_string(PairCriterion c) {
  return c == PairCriterion::coprime ? "coprime" : "reduced";
}

std::size_t GroebnerCertificate::reductions() const {
  return static_cast<std::size_t>(std::count_if(pairs.begin(), pairs.end(), [](const PairRecord& p) {
    return p.criterion == PairCriterion::reduced;
  }));
}

GroebnerCertificate is_groebner(const GeneratorSet& G, Execution exec) {
  GroebnerCertificate cert;
  cert.basis.assign(G.gens().begin(), G.gens().end());
  std::vector<Polynomial> spolys;
  std::vector<std::size_t> spoly_pair;
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      if (coprime(G.leading_monomial(i), G.leading_monomial(j))) {
        cert.pairs.push_back({i, j, PairCriterion::coprime, true});
      } else {
        spoly_pair.push_back(cert.pairs.size());
        cert.pairs.push_back({i, j, PairCriterion::reduced, false});
        spolys.push_back(s_polynomial(G[i], G[j]));
      }
    }
  }
  const auto remainders = reduce_batch(spolys, G, exec);
  for (std::size_t s = 0; s < remainders.size(); ++s) {
    PairRecord& rec = cert.pairs[spoly_pair[s]];
    rec.remainder_zero = remainders[s].is_zero();
    cert.is_groebner = cert.is_groebner && rec.remainder_zero;
  }
  return cert;
}

namespace {

struct PendingPair {
  std::size_t i;
  std::size_t j;
  unsigned lcm_degree;
  bool coprime;
};

bool pair_before(const PendingPair& a, const PendingPair& b) {
  if (a.lcm_degree != b.lcm_degree) return a.lcm_degree < b.lcm_degree;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

class PairQueue {
 public:
  void add_pairs_for(const std::vector<Polynomial>& basis, std::size_t newest) {
    const Monomial& lm = basis[newest].terms().front().monomial;
    for (std::size_t k = 0; k < newest; ++k) {
      const Monomial& other = basis[k].terms().front().monomial;
      pending_.push_back({k, newest, lcm(other, lm).total_degree(), coprime(other, lm)});
    }
  }

  bool empty() const { return pending_.empty(); }

  PendingPair pop_first() {
    auto it = std::min_element(pending_.begin(), pending_.end(), pair_before);
    PendingPair p = *it;
    pending_.erase(it);
    return p;
  }

  /// Removes and returns every pair of the smallest lcm degree, in order.
  std::vector<PendingPair> pop_min_degree() {
    unsigned d = std::min_element(pending_.begin(), pending_.end(), pair_before)->lcm_degree;
    std::vector<PendingPair> out;
    std::vector<PendingPair> rest;
    for (const PendingPair& p : pending_) (p.lcm_degree == d ? out : rest).push_back(p);
    pending_ = std::move(rest);
    std::sort(out.begin(), out.end(), pair_before);
    return out;
  }

 private:
  std::vector<PendingPair> pending_;
};

void append_if_nonzero(std::vector<Polynomial>& basis, PairQueue& queue, const Polynomial& r) {
  if (r.is_zero()) return;
  basis.push_back(make_monic(r));
  queue.add_pairs_for(basis, basis.size() - 1);
}

}  // namespace

GeneratorSet buchberger(const GeneratorSet& G, Execution exec) {
  std::vector<Polynomial> basis;
  PairQueue queue;
  for (const Polynomial& g : G.gens()) {
    basis.push_back(make_monic(g));
    queue.add_pairs_for(basis, basis.size() - 1);
  }

  if (exec == Execution::serial) {
    while (!queue.empty()) {
      const PendingPair p = queue.pop_first();
      if (p.coprime) continue;
      const GeneratorSet current(G.ring_ptr(), basis);
      append_if_nonzero(basis, queue, reduce(s_polynomial(basis[p.i], basis[p.j]), current));
    }
  } else {
    while (!queue.empty()) {
      std::vector<Polynomial> spolys;
      for (const PendingPair& p : queue.pop_min_degree()) {
        if (!p.coprime) spolys.push_back(s_polynomial(basis[p.i], basis[p.j]));
      }
      const GeneratorSet snapshot(G.ring_ptr(), basis);
      const auto remainders = reduce_batch(spolys, snapshot, exec);
      // Sequential merge: remainders must also be reduced against elements
      // added earlier in this same round.
      for (const Polynomial& r : remainders) {
        if (r.is_zero()) continue;
        const GeneratorSet current(G.ring_ptr(), basis);
        append_if_nonzero(basis, queue, reduce(r, current));
      }
    }
  }
  return reduce_basis(GeneratorSet(G.ring_ptr(), std::move(basis)));
}

GeneratorSet reduce_basis(const GeneratorSet& G) {
  const Ring& ring = G.ring();
  std::vector<Polynomial> sorted;
  for (const Polynomial& g : G.gens()) sorted.push_back(make_monic(g));
  std::stable_sort(sorted.begin(), sorted.end(), [&ring](const Polynomial& a, const Polynomial& b) {
    return ring.compare(a.terms().front().monomial, b.terms().front().monomial) ==
           std::strong_ordering::less;
  });
  std::vector<Polynomial> minimal;
  for (const Polynomial& g : sorted) {
    const Monomial& lm = g.terms().front().monomial;
    const bool redundant = std::any_of(minimal.begin(), minimal.end(), [&lm](const Polynomial& h) {
      return h.terms().front().monomial.divides(lm);
    });
    if (!redundant) minimal.push_back(g);
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Polynomial> others;
    for (std::size_t l = 0; l < minimal.size(); ++l) {
      if (l != k) others.push_back(minimal[l]);
    }
    const Term& lt = minimal[k].terms().front();
    Polynomial tail = reduce_against(drop_leading_term(minimal[k]), others, nullptr);
    reduced.push_back(add(Polynomial::monomial(G.ring_ptr(), lt.coeff, lt.monomial), tail));
  }
  std::reverse(reduced.begin(), reduced.end());
  return GeneratorSet(G.ring_ptr(), std::move(reduced));
}

InitialIdeal::InitialIdeal(RingPtr ring, std::vector<Monomial> gens) : ring_(std::move(ring)) {
  const Ring& r = *ring_;
  std::sort(gens.begin(), gens.end(), [&r](const Monomial& a, const Monomial& b) {
    return r.compare(a, b) == std::strong_ordering::less;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (const Monomial& m : gens) {
    const bool redundant = std::any_of(gens_.begin(), gens_.end(),
                                       [&m](const Monomial& g) { return g.divides(m); });
    if (!redundant) gens_.push_back(m);
  }
  std::reverse(gens_.begin(), gens_.end());
}

bool InitialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&m](const Monomial& g) { return g.divides(m); });
}

InitialIdeal initial_ideal(const GeneratorSet& G, Execution exec) {
  const GroebnerCertificate cert = is_groebner(G, exec);
  if (!cert.is_groebner) {
    throw NotGroebnerError("initial_ideal: generators do not form a Groebner basis");
  }
  std::vector<Monomial> lms;
  for (std::size_t k = 0; k < G.size(); ++k) lms.push_back(G.leading_monomial(k));
  return InitialIdeal(G.ring_ptr(), std::move(lms));
}

bool is_normal_monomial(const Monomial& m, const InitialIdeal& I) { return !I.contains(m); }

}  // namespace aslforge
