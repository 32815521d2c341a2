#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include "cochain/kernels.hpp"
#include "cochain/random.hpp"
#include "cochain/reference.hpp"
#include "cochain/sexpr.hpp"

using namespace cochain;

namespace {

Tensor sample_tensor(std::size_t dim, std::size_t rank) {
  Rng rng(dim * 131 + rank);
  return random_tensor(rng, dim, rank);
}

std::vector<std::size_t> leading(std::size_t k) {
  std::vector<std::size_t> v(k);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

void args(benchmark::internal::Benchmark* b) {
  for (int dim : {3, 4}) {
    for (int rank : {2, 3, 4}) b->Args({dim, rank});
  }
}

void BM_SkewKernel(benchmark::State& state) {
  const Tensor t = sample_tensor(state.range(0), state.range(1));
  const auto slots = leading(t.rank());
  for (auto _ : state) benchmark::DoNotOptimize(kernels::skew_symmetrize(t, slots));
}

void BM_SkewReference(benchmark::State& state) {
  const Tensor t = sample_tensor(state.range(0), state.range(1));
  const auto slots = leading(t.rank());
  for (auto _ : state) benchmark::DoNotOptimize(reference::skew_symmetrize(t, slots));
}

void BM_NablaKernel(benchmark::State& state) {
  const Tensor t = sample_tensor(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::nabla(t));
}

void BM_NablaReference(benchmark::State& state) {
  const Tensor t = sample_tensor(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(reference::nabla(t));
}

std::vector<Point> radius_points(std::size_t count) {
  EqualityPolicy policy;
  policy.domain.kind = SampleDomain::Kind::kPerfectSquareRadius;
  policy.domain.excluded_radii = {Rational(0)};
  return sample_points(policy, 4, count);
}

Tensor expression_tensor() {
  Tensor t(4, 2);
  const char* h = "(+ 1 (/ 1 (sqrt (+ (^ x1 2) (^ x2 2) (^ x3 2)))))";
  for (std::size_t a = 0; a < 4; ++a) {
    t.set({a, a}, parse_field(std::string("(^ ") + h + " " + std::to_string(a + 1) + ")", 4));
  }
  return t;
}

void BM_EvaluateKernel(benchmark::State& state) {
  const Tensor t = expression_tensor();
  const auto points = radius_points(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::evaluate(t, points));
}

void BM_EvaluateReference(benchmark::State& state) {
  const Tensor t = expression_tensor();
  const auto points = radius_points(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reference::evaluate(t, points));
}

}  // namespace

BENCHMARK(BM_SkewKernel)->Apply(args);
BENCHMARK(BM_SkewReference)->Apply(args);
BENCHMARK(BM_NablaKernel)->Apply(args);
BENCHMARK(BM_NablaReference)->Apply(args);
BENCHMARK(BM_EvaluateKernel)->Arg(16)->Arg(100);
BENCHMARK(BM_EvaluateReference)->Arg(16)->Arg(100);

BENCHMARK_MAIN();
