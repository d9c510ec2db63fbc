#include <benchmark/benchmark.h>

#include <random>

#include "lgcalc/chow.hpp"
#include "lgcalc/graph.hpp"
#include "lgcalc/sectors.hpp"

using namespace lgcalc;

namespace {

IntMatrix random_matrix(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> entry(-20, 20);
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = entry(rng);
  return m;
}

void SmithNormalForm(benchmark::State& state) {
  std::mt19937 rng(1);
  auto m = random_matrix(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto s = smith_normal_form(m);
    benchmark::DoNotOptimize(s.rank);
  }
}
BENCHMARK(SmithNormalForm)->Arg(4)->Arg(6)->Arg(8);

void PhaseKernel(benchmark::State& state) {
  std::mt19937 rng(2);
  IntMatrix m = random_matrix(rng, 4);
  if (m.determinant() == 0) m.at(0, 0) += 1;
  for (auto _ : state) {
    auto g = phase_kernel(m);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(PhaseKernel);

void EnumerateAdmissible(benchmark::State& state) {
  auto space = LgSpace::build(QuasiHomogPoly::parse("x1^5 + x2^5", 2), GroupSpec::aut());
  for (auto _ : state) {
    auto tuples = enumerate_admissible(space, 0, static_cast<int>(state.range(0)), true);
    benchmark::DoNotOptimize(tuples.size());
  }
}
BENCHMARK(EnumerateAdmissible)->Arg(2)->Arg(3);

void NondegeneracyGroebner(benchmark::State& state) {
  auto W = QuasiHomogPoly::parse("x1^3*x2 + x2^3*x3 + x3^3", 3);
  auto w = infer_weights(W);
  for (auto _ : state) {
    auto r = check_nondegenerate(W, w);
    benchmark::DoNotOptimize(r.no_cross_terms);
  }
}
BENCHMARK(NondegeneracyGroebner);

void FreeCaseClass(benchmark::State& state) {
  FreeCaseInput in;
  in.ranks = {2, 1};
  in.coranks = {3, 3};
  WeightBlock b;
  b.d = 5;
  b.delta = {Int(1), Int(2)};
  in.weights = WeightSystem(std::move(b));
  in.truncation = static_cast<int>(state.range(0));
  GradedRing ring = make_free_case_ring(in);
  for (auto _ : state) {
    auto cls = free_case_class(ring, in);
    benchmark::DoNotOptimize(cls.is_zero());
  }
}
BENCHMARK(FreeCaseClass)->Arg(3)->Arg(6);

void WeightedSegre(benchmark::State& state) {
  const std::vector<int> ranks{2, 3};
  const int T = static_cast<int>(state.range(0));
  GradedRing ring = make_segre_ring(ranks, T);
  for (auto _ : state) {
    auto s = weighted_segre_series(ring, ranks, {Int(2), Int(3)}, T);
    benchmark::DoNotOptimize(s.coefficients().size());
  }
}
BENCHMARK(WeightedSegre)->Arg(8)->Arg(12);

void GraphAutomorphisms(benchmark::State& state) {
  auto space = LgSpace::build(QuasiHomogPoly::parse("x1^3", 1), GroupSpec::aut());
  PhaseVec dec = phase_vec({Rational(Int(1), Int(3))});
  DecoratedGraph g;
  for (int i = 0; i < 6; ++i) g.vertices.push_back({1});
  for (int i = 0; i < 6; ++i) g.edges.push_back({i, (i + 1) % 6, dec});
  auto cm = contract_all(g).second;
  for (auto _ : state) {
    auto n = automorphism_order(cm);
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(GraphAutomorphisms);

}  // namespace

BENCHMARK_MAIN();
