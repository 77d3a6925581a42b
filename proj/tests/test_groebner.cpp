#include <doctest.h>

#include <random>

#include "aslforge/enumerate.hpp"
#include "aslforge/errors.hpp"
#include "aslforge/groebner.hpp"
#include "aslforge/matrix_ideal.hpp"
#include "support/oracle.hpp"
#include "support/random.hpp"

using namespace aslforge;

namespace {

struct Fixture {
  RingPtr ring;
  std::vector<Polynomial> gens;
  GeneratorSet G;

  static Fixture make(const MatrixPattern& p) {
    RingPtr r = ring_for(p);
    auto g = ideal_generators(p, r);
    GeneratorSet set = GeneratorSet::nonzero(r, g);
    return {r, std::move(g), std::move(set)};
  }

  Monomial x(int i, int j) const { return Monomial::var(ring->context().x(i, j)); }
  Monomial y(int j) const { return Monomial::var(ring->context().y(j)); }
  Polynomial poly(const Coeff& c, const Monomial& m) const { return Polynomial::monomial(ring, c, m); }
};

Polynomial sum(std::initializer_list<Polynomial> ps) {
  Polynomial acc(ps.begin()->ring_ptr());
  for (const Polynomial& p : ps) acc = add(acc, p);
  return acc;
}

bool is_fully_reduced(const Polynomial& r, const GeneratorSet& G) {
  for (const Term& t : r.terms()) {
    for (std::size_t k = 0; k < G.size(); ++k) {
      if (G.leading_monomial(k).divides(t.monomial)) return false;
    }
  }
  return true;
}

std::vector<Monomial> sorted(std::span<const Monomial> ms) {
  std::vector<Monomial> v(ms.begin(), ms.end());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("reduce x_11*y_1 by the generic n=2 generators") {
  const Fixture f = Fixture::make(MatrixPattern::generic(2));
  const Polynomial r = reduce(f.poly(1, f.x(1, 1) * f.y(1)), f.G);
  CHECK(r == f.poly(-1, f.x(1, 2) * f.y(2)));
  CHECK(reduce(f.gens[0], f.G).is_zero());
  CHECK(reduce(Polynomial(f.ring), f.G).is_zero());
}

TEST_CASE("reduce x_11*x_22*y_1*y_2 for n=3 (dense oracle)") {
  const Fixture f = Fixture::make(MatrixPattern::generic(3));
  const Polynomial input = f.poly(1, f.x(1, 1) * f.x(2, 2) * f.y(1) * f.y(2));
  const Polynomial r = reduce(input, f.G);
  // (-x12 y2 - x13 y3)(-x21 y1 - x23 y3), already free of x_ii*y_i factors.
  const Polynomial expected = sum({f.poly(1, f.x(1, 2) * f.x(2, 1) * f.y(1) * f.y(2)),
                                   f.poly(1, f.x(1, 2) * f.x(2, 3) * f.y(2) * f.y(3)),
                                   f.poly(1, f.x(1, 3) * f.x(2, 1) * f.y(1) * f.y(3)),
                                   f.poly(1, f.x(1, 3) * f.x(2, 3) * f.y(3) * f.y(3))});
  CHECK(r == expected);
  // Independent confirmation: difference lies in the ideal, and every term is normal.
  CHECK(oracle::in_ideal(f.gens, subtract(input, expected)));
  CHECK(is_fully_reduced(expected, f.G));
}

TEST_CASE("division contract with exact quotients") {
  std::mt19937 rng(42);
  for (int n = 2; n <= 3; ++n) {
    const Fixture f = Fixture::make(MatrixPattern::generic(n));
    for (int trial = 0; trial < 40; ++trial) {
      const Polynomial p = testgen::random_polynomial(rng, f.ring, 6, 4);
      const DivisionResult d = divide(p, f.G);
      REQUIRE(d.quotients.size() == f.G.size());
      Polynomial recon = d.remainder;
      for (std::size_t k = 0; k < f.G.size(); ++k) recon = add(recon, multiply(d.quotients[k], f.G[k]));
      CHECK(recon == p);
      CHECK(d.remainder == reduce(p, f.G));
      CHECK(is_fully_reduced(d.remainder, f.G));
    }
  }
}

TEST_CASE("reduce is idempotent and linear modulo a Groebner basis") {
  std::mt19937 rng(3);
  const Fixture f = Fixture::make(MatrixPattern::generic(3));
  for (int trial = 0; trial < 30; ++trial) {
    const Polynomial a = testgen::random_polynomial(rng, f.ring, 5, 4);
    const Polynomial b = testgen::random_polynomial(rng, f.ring, 5, 4);
    const Coeff ca = testgen::random_coeff(rng);
    const Coeff cb = testgen::random_coeff(rng);
    const Polynomial ra = reduce(a, f.G);
    CHECK(reduce(ra, f.G) == ra);
    CHECK(reduce(add(scale(a, ca), scale(b, cb)), f.G) == add(scale(ra, ca), scale(reduce(b, f.G), cb)));
  }
}

TEST_CASE("s_polynomial") {
  const Fixture f = Fixture::make(MatrixPattern::generic(2));
  CHECK(s_polynomial(f.gens[0], f.gens[0]).is_zero());
  // lcm = x11 x22 y1 y2: x22 y2 * g1 - x11 y1 * g2.
  const Polynomial s = s_polynomial(f.gens[0], f.gens[1]);
  const Polynomial expected = subtract(f.poly(1, f.x(1, 2) * f.x(2, 2) * f.y(2) * f.y(2)),
                                       f.poly(1, f.x(1, 1) * f.x(2, 1) * f.y(1) * f.y(1)));
  CHECK(s == expected);
  CHECK(reduce(s, f.G).is_zero());
  CHECK(coprime(f.G.leading_monomial(0), f.G.leading_monomial(1)));

  std::mt19937 rng(8);
  const RingPtr ring = f.ring;
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial a = testgen::random_polynomial(rng, ring, 4, 3);
    const Polynomial b = testgen::random_polynomial(rng, ring, 4, 3);
    if (a.is_zero() || b.is_zero()) continue;
    const Monomial l = lcm(leading_term(a)->monomial, leading_term(b)->monomial);
    const Polynomial sp = s_polynomial(a, b);
    if (!sp.is_zero()) CHECK(ring->compare(leading_term(sp)->monomial, l) == std::strong_ordering::less);
  }
  CHECK_THROWS_AS(s_polynomial(Polynomial(ring), f.gens[0]), UsageError);
}

TEST_CASE("is_groebner: generic generators, all pairs coprime") {
  for (int n = 2; n <= 8; ++n) {
    const Fixture f = Fixture::make(MatrixPattern::generic(n));
    const GroebnerCertificate cert = is_groebner(f.G);
    CHECK(cert.is_groebner);
    CHECK(cert.pairs.size() == static_cast<std::size_t>(n * (n - 1) / 2));
    CHECK(cert.reductions() == 0);
    for (const PairRecord& p : cert.pairs) {
      CHECK(p.criterion == PairCriterion::coprime);
      CHECK(p.remainder_zero);
    }
  }
}

TEST_CASE("is_groebner: incomplete set and singleton") {
  const Fixture f = Fixture::make(MatrixPattern::generic(2));
  const GeneratorSet bad(f.ring, {f.gens[0], f.poly(1, f.x(1, 1))});
  const GroebnerCertificate cert = is_groebner(bad);
  CHECK_FALSE(cert.is_groebner);
  REQUIRE(cert.pairs.size() == 1);
  CHECK(cert.pairs[0].criterion == PairCriterion::reduced);
  CHECK_FALSE(cert.pairs[0].remainder_zero);
  // The S-pair leaves x12*y2 behind.
  CHECK(reduce(s_polynomial(bad[0], bad[1]), bad) == f.poly(1, f.x(1, 2) * f.y(2)));
  CHECK_THROWS_AS(initial_ideal(bad), NotGroebnerError);

  CHECK(is_groebner(GeneratorSet(f.ring, {f.gens[1]})).is_groebner);
  CHECK_THROWS_AS(GeneratorSet(f.ring, {Polynomial(f.ring)}), UsageError);
}

TEST_CASE("buchberger: generic, principal, and fixed point") {
  for (int n = 1; n <= 5; ++n) {
    const Fixture f = Fixture::make(MatrixPattern::generic(n));
    const GeneratorSet B = buchberger(f.G);
    REQUIRE(B.size() == f.G.size());
    for (const Polynomial& g : f.gens) CHECK(std::find(B.gens().begin(), B.gens().end(), g) != B.gens().end());
    CHECK(buchberger(B) == B);
  }
  const Fixture f = Fixture::make(MatrixPattern::generic(2));
  const Polynomial p = add(f.poly(Coeff(3), f.x(1, 2) * f.y(1)), f.poly(Coeff(-2, 5), f.y(2)));
  const GeneratorSet B = buchberger(GeneratorSet(f.ring, {p}));
  REQUIRE(B.size() == 1);
  CHECK(B[0] == scale(p, Coeff(1, 3)));
}

TEST_CASE("buchberger on the zero pattern with x_22 = 0") {
  const Fixture f = Fixture::make(MatrixPattern::zero_pattern({{true, true}, {true, false}}));
  REQUIRE(f.gens[1] == f.poly(1, f.x(2, 1) * f.y(1)));
  const GeneratorSet B = buchberger(f.G);
  CHECK(is_groebner(B).is_groebner);
  // Hand computation: S(g1, g2) = x21*g1 - x11*g2 = x12*x21*y2 is the only new element.
  const Polynomial extra = f.poly(1, f.x(1, 2) * f.x(2, 1) * f.y(2));
  CHECK(B.size() == 3);
  CHECK(std::find(B.gens().begin(), B.gens().end(), extra) != B.gens().end());
  CHECK(oracle::in_ideal(f.gens, extra));

  const InitialIdeal in = initial_ideal(B);
  const std::vector<Monomial> expected = {f.x(1, 1) * f.y(1), f.x(2, 1) * f.y(1), f.x(1, 2) * f.x(2, 1) * f.y(2)};
  CHECK(sorted(in.generators()) == sorted(expected));
  // Hilbert function of the staircase equals the dense quotient dimension.
  const std::size_t nv = f.ring->context().num_variables();
  for (unsigned k = 0; k <= 4; ++k) {
    std::size_t normal = 0;
    for (const Monomial& m : monomials_of_degree(nv, k)) normal += is_normal_monomial(m, in);
    CHECK(normal == oracle::quotient_dimension(f.gens, nv, k));
  }

  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial elt(f.ring);
    for (const Polynomial& g : f.gens) elt = add(elt, multiply(testgen::random_polynomial(rng, f.ring, 3, 2), g));
    CHECK(reduce(elt, B).is_zero());
    CHECK(oracle::in_ideal(f.gens, elt));
  }
}

TEST_CASE("buchberger on random zero patterns") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 2 + trial % 2;
    const Fixture f = Fixture::make(MatrixPattern::zero_pattern(testgen::random_mask(rng, n, trial % 3 != 0)));
    const GeneratorSet B = buchberger(f.G);
    CHECK(is_groebner(B).is_groebner);
    CHECK(buchberger(B) == B);
    CHECK(buchberger(f.G, Execution::serial) == B);
    for (const Polynomial& g : f.G.gens()) CHECK(reduce(g, B).is_zero());
    for (const Polynomial& b : B.gens()) {
      CHECK(leading_term(b)->coeff == 1);
      CHECK(oracle::in_ideal(f.gens, b));
    }
    // Auto-reduced: no term of any element divisible by another leading monomial.
    for (std::size_t a = 0; a < B.size(); ++a) {
      for (const Term& t : B[a].terms()) {
        for (std::size_t b = 0; b < B.size(); ++b) {
          if (a != b) CHECK_FALSE(B.leading_monomial(b).divides(t.monomial));
        }
      }
    }
  }
}

TEST_CASE("initial ideal examples") {
  const Fixture f = Fixture::make(MatrixPattern::generic(3));
  const InitialIdeal in = initial_ideal(f.G);
  const std::vector<Monomial> expected = {f.x(1, 1) * f.y(1), f.x(2, 2) * f.y(2), f.x(3, 3) * f.y(3)};
  CHECK(std::vector<Monomial>(in.generators().begin(), in.generators().end()) == expected);

  const Polynomial p = add(f.poly(1, f.x(1, 2) * f.y(3)), f.poly(1, f.y(1) * f.y(1)));
  const InitialIdeal principal = initial_ideal(GeneratorSet(f.ring, {p}));
  REQUIRE(principal.generators().size() == 1);
  CHECK(principal.generators()[0] == leading_term(p)->monomial);

  // Minimality: a redundant generator is dropped.
  const InitialIdeal mi(f.ring, {f.x(1, 1), f.x(1, 1) * f.y(2), f.y(3)});
  CHECK(mi.generators().size() == 2);
}

TEST_CASE("normal monomials") {
  const Fixture f = Fixture::make(MatrixPattern::generic(2));
  const InitialIdeal in = initial_ideal(f.G);
  CHECK(is_normal_monomial(f.x(1, 1) * f.y(2), in));
  CHECK_FALSE(is_normal_monomial(f.x(1, 1) * f.y(1) * f.x(1, 2), in));
  std::size_t normal = 0;
  for (const Monomial& m : monomials_of_degree(6, 2)) normal += is_normal_monomial(m, in);
  // C(7, 2) = 21 monomials minus x11*y1 and x22*y2.
  CHECK(normal == 19);
}

TEST_CASE("normal monomials are a basis of each graded slice (dense oracle)") {
  const std::vector<std::pair<int, unsigned>> cases = {{1, 4}, {2, 4}, {3, 3}, {3, 4}};
  for (const auto& [n, d] : cases) {
    CAPTURE(n);
    const Fixture f = Fixture::make(MatrixPattern::generic(n));
    const InitialIdeal in = initial_ideal(f.G);
    const std::size_t nv = f.ring->context().num_variables();
    for (unsigned k = 0; k <= d; ++k) {
      CAPTURE(k);
      oracle::IdealSlice slice = oracle::ideal_slice(f.gens, nv, k);
      const std::size_t ideal_rank = slice.echelon.rank();
      std::size_t normal = 0;
      for (std::size_t c = 0; c < slice.columns.size(); ++c) {
        const Monomial m = oracle::from_exps(slice.columns[c]);
        if (!is_normal_monomial(m, in)) continue;
        ++normal;
        std::vector<mpq_class> unit(slice.columns.size());
        unit[c] = 1;
        // Independent of the ideal slice and of the other normal monomials.
        CHECK(slice.echelon.insert(std::move(unit)));
      }
      // Together they span the whole slice.
      CHECK(slice.echelon.rank() == slice.columns.size());
      CHECK(ideal_rank + normal == slice.columns.size());
    }
  }
}

TEST_CASE("symmetric generators form a Groebner basis") {
  for (int n = 2; n <= 5; ++n) {
    const Fixture f = Fixture::make(MatrixPattern::symmetric(n));
    const GroebnerCertificate cert = is_groebner(f.G);
    CHECK(cert.is_groebner);
    CHECK(cert.reductions() == 0);
  }
}

TEST_CASE("GF(p) Buchberger agrees with the rational one on a 0/1 example") {
  const MatrixPattern p = MatrixPattern::zero_pattern({{true, true, false}, {true, false, true}, {false, true, true}});
  const RingPtr rq = ring_for(p);
  const RingPtr rp = ring_for(p, Field::prime(32003));
  const GeneratorSet Bq = buchberger(GeneratorSet::nonzero(rq, ideal_generators(p, rq)));
  const GeneratorSet Bp = buchberger(GeneratorSet::nonzero(rp, ideal_generators(p, rp)));
  REQUIRE(Bq.size() == Bp.size());
  for (std::size_t k = 0; k < Bq.size(); ++k) CHECK(Bq.leading_monomial(k) == Bp.leading_monomial(k));
}
