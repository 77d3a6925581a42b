#include <benchmark/benchmark.h>

#include <random>

#include "aslforge/asl.hpp"
#include "aslforge/enumerate.hpp"
#include "aslforge/matrix_ideal.hpp"

using namespace aslforge;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

GeneratorSet generic_generators(int n) {
  const MatrixPattern p = MatrixPattern::generic(n);
  const RingPtr ring = ring_for(p);
  return GeneratorSet::nonzero(ring, ideal_generators(p, ring));
}

Polynomial random_polynomial(std::mt19937& rng, const RingPtr& ring, int terms, unsigned degree) {
  const std::size_t nv = ring->context().num_variables();
  std::uniform_int_distribution<std::size_t> var(0, nv - 1);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::vector<Term> out;
  for (int t = 0; t < terms; ++t) {
    std::vector<Factor> f;
    for (unsigned k = 0; k < degree; ++k) f.push_back({static_cast<VarIndex>(var(rng)), 1});
    out.push_back({Coeff(coeff(rng)), Monomial::from_factors(f)});
  }
  return Polynomial::from_terms(ring, std::move(out));
}

void BM_ReduceBatch(benchmark::State& state) {
  const GeneratorSet G = generic_generators(5);
  std::mt19937 rng(1);
  std::vector<Polynomial> inputs;
  for (int k = 0; k < 256; ++k) inputs.push_back(random_polynomial(rng, G.ring_ptr(), 12, 5));
  for (auto _ : state) benchmark::DoNotOptimize(reduce_batch(inputs, G, mode(state)));
}

void BM_IsGroebner(benchmark::State& state) {
  const GeneratorSet G = generic_generators(8);
  for (auto _ : state) benchmark::DoNotOptimize(is_groebner(G, mode(state)));
}

void BM_TransitiveClosure(benchmark::State& state) {
  const Poset p = build_poset(8, Execution::serial);
  std::mt19937 rng(2);
  std::vector<ElementPair> rel(p.relations().begin(), p.relations().end());
  const std::size_t size = 600;
  std::uniform_int_distribution<std::size_t> pick(0, size - 1);
  for (int e = 0; e < 2000; ++e) {
    const std::size_t a = pick(rng), b = pick(rng);
    if (a != b) rel.emplace_back(std::min(a, b), std::max(a, b));
  }
  for (auto _ : state) benchmark::DoNotOptimize(transitive_closure(size, rel, mode(state)));
}

void BM_ClassifyMonomials(benchmark::State& state) {
  const GeneratorSet G = generic_generators(3);
  const InitialIdeal in = initial_ideal(G);
  const Poset p = build_poset(3, Execution::serial);
  const auto monomials = monomials_of_degree(G.ring().context().num_variables(), 5);
  for (auto _ : state) benchmark::DoNotOptimize(classify_monomials(monomials, p, in, mode(state)));
}

void BM_BuchbergerZeroPattern(benchmark::State& state) {
  std::vector<std::vector<bool>> mask(4, std::vector<bool>(4, true));
  mask[0][3] = mask[2][1] = mask[3][0] = false;
  const MatrixPattern p = MatrixPattern::zero_pattern(mask);
  const RingPtr ring = ring_for(p);
  const GeneratorSet G = GeneratorSet::nonzero(ring, ideal_generators(p, ring));
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(G, mode(state)));
}

void BM_Axiom2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_axiom2(6, Field::rationals(), mode(state)));
}

}  // namespace

BENCHMARK(BM_ReduceBatch)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IsGroebner)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TransitiveClosure)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassifyMonomials)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuchbergerZeroPattern)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Axiom2)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
