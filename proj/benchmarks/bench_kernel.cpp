// Microbenchmarks for the exact-arithmetic hot paths: series products and
// inverses, Jacobians, matrix inversion, the exterior derivative, and the
// rank tables. Run with --benchmark_filter=<regex> to select a subset.

#include <benchmark/benchmark.h>

#include "zjet/derham.hpp"
#include "zjet/form.hpp"
#include "zjet/gmatrix.hpp"
#include "zjet/localforms.hpp"
#include "zjet/morphism.hpp"
#include "zjet/random.hpp"

namespace {

using namespace zjet;

AlgebraPtr mixed_domain(int cap) {
  return make_algebra(
      CoordinateSystem(2, {"x", "z", "a", "b"},
                       {Degree::from_components({0, 0}), Degree::from_components({1, 1}),
                        Degree::from_components({0, 1}), Degree::from_components({1, 0})}),
      cap);
}

void BM_series_product(benchmark::State& state) {
  AlgebraPtr alg = mixed_domain(static_cast<int>(state.range(0)));
  // Dense operands: (1 + sum of coordinates)^(cap/2) fills every admissible
  // monomial slot, so the product cost scales with the cap.
  Series base = Series::constant(alg, Rat(1));
  for (int i = 0; i < alg->dim(); ++i) base = base + Series::coordinate(alg, i);
  Series f = base;
  for (int k = 1; k < alg->cap() / 2; ++k) f = f * base;
  for (auto _ : state) benchmark::DoNotOptimize(f * f);
}
BENCHMARK(BM_series_product)->Arg(3)->Arg(6);

void BM_series_inverse(benchmark::State& state) {
  AlgebraPtr alg = mixed_domain(6);
  RandomSource rng(2);
  Series u = Series::constant(alg, Rat(1)) +
             rng.homogeneous_series(alg, Degree::zero(2), true, 1, alg->cap());
  for (auto _ : state) benchmark::DoNotOptimize(u.inverted());
}
BENCHMARK(BM_series_inverse);

void BM_jacobian(benchmark::State& state) {
  AlgebraPtr alg = mixed_domain(4);
  RandomSource rng(3);
  Morphism m = rng.morphism(alg, alg, 3);
  for (auto _ : state) benchmark::DoNotOptimize(graded_jacobian(m));
}
BENCHMARK(BM_jacobian);

void BM_matrix_inverse(benchmark::State& state) {
  AlgebraPtr alg = mixed_domain(4);
  RandomSource rng(4);
  std::vector<Degree> degs;
  for (const Degree& d : standard_order(2)) {
    degs.push_back(d);
    degs.push_back(d);
  }
  GradedMatrix m = rng.degree0_matrix(alg, degs, degs, 2);
  while (!is_invertible_deg0(m)) m = rng.degree0_matrix(alg, degs, degs, 2);
  for (auto _ : state) benchmark::DoNotOptimize(neumann_inverse(m));
}
BENCHMARK(BM_matrix_inverse);

void BM_morphism_inverse(benchmark::State& state) {
  AlgebraPtr alg = mixed_domain(4);
  RandomSource rng(5);
  Morphism m = rng.automorphism(alg);
  for (auto _ : state) benchmark::DoNotOptimize(invert_morphism(m));
}
BENCHMARK(BM_morphism_inverse);

void BM_exterior_derivative(benchmark::State& state) {
  AlgebraPtr alg = mixed_domain(5);
  RandomSource rng(6);
  Form w = rng.form(alg, 2, 8, 4).with_form_cap(4);
  for (auto _ : state) benchmark::DoNotOptimize(exterior_derivative(w));
}
BENCHMARK(BM_exterior_derivative);

void BM_derham_table(benchmark::State& state) {
  AlgebraPtr alg = mixed_domain(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(derham_ranks(alg, 2, alg->cap()));
}
BENCHMARK(BM_derham_table)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
