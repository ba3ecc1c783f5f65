#include <benchmark/benchmark.h>

#include "ptb/catalog.hpp"
#include "ptb/iso.hpp"

using namespace ptb;

namespace {

const Decomposition& M2() {
  static const Decomposition D = build_decomposition(build_M_geometry(2));
  return D;
}

void BM_OperatorAssembly(benchmark::State& st) {
  const Exec mode = st.range(0) ? Exec::openmp : Exec::serial;
  for (auto _ : st) benchmark::DoNotOptimize(assemble_curvature_operator(M2(), 0.5, mode).M.data());
}
BENCHMARK(BM_OperatorAssembly)->Arg(0)->Arg(1)->ArgNames({"openmp"})->Unit(benchmark::kMillisecond);

void BM_SecBounds(benchmark::State& st) {
  const CurvatureOperator op = assemble_curvature_operator(M2(), 0.5);
  const Exec mode = st.range(0) ? Exec::openmp : Exec::serial;
  for (auto _ : st) benchmark::DoNotOptimize(sec_bounds(op, M2(), 16, 20, 1, mode).max);
}
BENCHMARK(BM_SecBounds)->Arg(0)->Arg(1)->ArgNames({"openmp"})->Unit(benchmark::kMillisecond);

void BM_IsoDecide(benchmark::State& st) {
  const RingPtr a = family_ring(make_family(Family::E, 1)), b = family_ring(make_family(Family::E, 2));
  const Exec mode = st.range(0) ? Exec::openmp : Exec::serial;
  for (auto _ : st) benchmark::DoNotOptimize(iso_decide(a, b, mode).result);
}
BENCHMARK(BM_IsoDecide)->Arg(0)->Arg(1)->ArgNames({"openmp"})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
