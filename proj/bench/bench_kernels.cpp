// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "agdmm/dmm_codes.hpp"
#include "agdmm/kernels.hpp"
#include "agdmm/presets.hpp"
#include "agdmm/rng.hpp"
#include "agdmm/simulator.hpp"

using namespace agdmm;
using kernels::Exec;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

Field field_of(std::int64_t q) { return q == 25 ? Field::make(5, 2) : Field::make(65521, 1); }

void BM_matmul(benchmark::State& state) {
  const Field f = field_of(state.range(1));
  const std::size_t n = static_cast<std::size_t>(state.range(2));
  Rng rng(1);
  const Matrix a = random_matrix(f, n, n, rng), b = random_matrix(f, n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::matmul(a, b, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * n * n * n);
}

void BM_row_reduce(benchmark::State& state) {
  const Field f = field_of(state.range(1));
  const std::size_t n = static_cast<std::size_t>(state.range(2));
  Rng rng(2);
  const Matrix m = random_matrix(f, n, 2 * n, rng);
  for (auto _ : state) {
    Matrix work = m;
    benchmark::DoNotOptimize(kernels::row_reduce(work, n, exec_of(state)));
  }
}

void BM_encode(benchmark::State& state) {
  const CurveSpec c = presets::curve("example1");
  const SchemeParams p{Scheme::PolyAG, 8, 5, c, {160, 120, 200}};
  Rng rng(3);
  const Blocks blocks =
      partition(random_matrix(c.field, 160, 120, rng), random_matrix(c.field, 120, 200, rng), p);
  const auto desc = basis_descriptor(p);
  const auto places = usable_places(c, Scheme::PolyAG);
  for (auto _ : state) benchmark::DoNotOptimize(encode(blocks, desc, c, places, 47, nullptr, exec_of(state)));
}

void BM_enumerate_places(benchmark::State& state) {
  // y^3 = (x - 1)(x - 2)/(x - 3) over GF(7^4).
  const Field f = Field::make(7, 4);
  const CurveSpec c = CurveSpec::kummer(f, 3, {Element{1}, Element{2}}, {Element{3}});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_places(c, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_matmul)->ArgNames({"parallel", "q", "n"})->ArgsProduct({{0, 1}, {25, 65521}, {64, 256}});
BENCHMARK(BM_row_reduce)->ArgNames({"parallel", "q", "n"})->ArgsProduct({{0, 1}, {25, 65521}, {128}});
BENCHMARK(BM_encode)->ArgNames({"parallel"})->Arg(0)->Arg(1);
BENCHMARK(BM_enumerate_places)->ArgNames({"parallel"})->Arg(0)->Arg(1);

BENCHMARK_MAIN();
