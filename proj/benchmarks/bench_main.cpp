#include <benchmark/benchmark.h>

#include "qcat/exactlin/linalg.hpp"
#include "qcat/ideal.hpp"
#include "qcat/monoidal.hpp"
#include "qcat/quotient.hpp"
#include "qcat/random.hpp"

using namespace qcat;

namespace {

BackendPtr chain(Field f, std::size_t n) {
  std::vector<Arrow> arrows;
  for (std::size_t v = 0; v + 1 < n; ++v) arrows.push_back({v, v + 1, ""});
  return Backend::path_algebra(f, n, arrows);
}

void BM_KernelBasis(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Field f = state.range(1) ? Field::rationals() : Field::prime(101);
  auto rng = gen::trial_rng(1, 0);
  const Mat m = gen::random_matrix(f, n, n + 2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(lin::kernel_basis(m));
}
BENCHMARK(BM_KernelBasis)->ArgsProduct({{8, 16, 32}, {0, 1}});

void BM_HomBasis(benchmark::State& state) {
  const auto b = chain(Field::prime(3), 4);
  auto rng = gen::trial_rng(2, 0);
  const gen::Bounds bounds{static_cast<std::size_t>(state.range(0)), 3};
  const Obj m = gen::random_object(b, rng, bounds), n = gen::random_object(b, rng, bounds);
  for (auto _ : state) benchmark::DoNotOptimize(hom_basis(m, n));
}
BENCHMARK(BM_HomBasis)->Arg(4)->Arg(8)->Arg(12);

void BM_QHomBasis(benchmark::State& state) {
  const auto b = chain(Field::prime(3), 4);
  const auto c = SerreSpec::from_indices(b, {1, 3});
  auto rng = gen::trial_rng(3, 0);
  const gen::Bounds bounds{static_cast<std::size_t>(state.range(0)), 3};
  const Obj m = gen::random_object(b, rng, bounds), n = gen::random_object(b, rng, bounds);
  for (auto _ : state) benchmark::DoNotOptimize(qhom_basis(m, n, c));
}
BENCHMARK(BM_QHomBasis)->Arg(4)->Arg(8)->Arg(12);

void BM_CompositionSeries(benchmark::State& state) {
  const auto b = Backend::group_algebra(Field::prime(7), {6});
  auto rng = gen::trial_rng(4, 0);
  const Obj m = gen::random_object(b, rng, {static_cast<std::size_t>(state.range(0)), 3});
  for (auto _ : state) benchmark::DoNotOptimize(composition_factors(m));
}
BENCHMARK(BM_CompositionSeries)->Arg(4)->Arg(8)->Arg(12);

void BM_TensorAssociator(benchmark::State& state) {
  const auto b = Backend::group_algebra(Field::prime(5), {4});
  auto rng = gen::trial_rng(5, 0);
  const gen::Bounds bounds{static_cast<std::size_t>(state.range(0)), 3};
  const Obj x = gen::random_object(b, rng, bounds), y = gen::random_object(b, rng, bounds);
  const Obj z = gen::random_object(b, rng, bounds);
  for (auto _ : state) benchmark::DoNotOptimize(associator(x, y, z));
}
BENCHMARK(BM_TensorAssociator)->Arg(2)->Arg(3)->Arg(4);

void BM_EnumerateIdeals(benchmark::State& state) {
  const auto b = Backend::matvec(Field::rationals(),
                                 std::vector<std::size_t>(static_cast<std::size_t>(state.range(0)), 1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_tensor_ideals(b));
}
BENCHMARK(BM_EnumerateIdeals)->Arg(4)->Arg(8)->Arg(12);

}  // namespace
BENCHMARK_MAIN();
