// Serial reference vs OpenMP kernels. ORBITLIMITS_THREADS caps the team.
#include <benchmark/benchmark.h>

#include "orbitlimits/kempf.hpp"
#include "orbitlimits/lie.hpp"
#include "orbitlimits/random.hpp"
#include "orbitlimits/reproduce.hpp"

using namespace ol;

namespace {

Exec exec_of(const benchmark::State& st) { return st.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

void label(benchmark::State& st) { st.SetLabel(st.range(0) == 0 ? "serial" : "parallel"); }

void BM_OrbitMapDet3(benchmark::State& st) {
  auto rep = Representation::sym(9, 3);
  QVec v = rep.to_vec(determinant_form(3));
  for (auto _ : st) benchmark::DoNotOptimize(rep.orbit_map(v, exec_of(st)));
  label(st);
}

void BM_StabilizerDet3(benchmark::State& st) {
  auto rep = Representation::sym(9, 3);
  QVec v = rep.to_vec(determinant_form(3));
  for (auto _ : st) benchmark::DoNotOptimize(stabilizer_algebra(rep, v, exec_of(st)));
  label(st);
}

void BM_Rank(benchmark::State& st) {
  Rng rng(7);
  const std::size_t n = 48;
  QMatrix m(n, n + 8);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n + 8; ++j) m(i, j) = random_rational(rng, 9, 4);
  for (auto _ : st) benchmark::DoNotOptimize(rank(m, exec_of(st)));
  label(st);
}

void BM_Nullspace(benchmark::State& st) {
  Rng rng(8);
  const std::size_t n = 40;
  QMatrix m(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < 2 * n; ++j) m(i, j) = random_rational(rng, 9, 4);
  for (auto _ : st) benchmark::DoNotOptimize(nullspace(m, exec_of(st)));
  label(st);
}

void BM_KempfMultistart(benchmark::State& st) {
  auto cases = kempf_test_vectors();
  const auto& c = cases.back();
  auto sup = kempf_support(c.rep, c.v);
  for (auto _ : st) benchmark::DoNotOptimize(kempf_descent(sup, c.rep.n(), 4096.0, {}, exec_of(st)));
  label(st);
}

}  // namespace

BENCHMARK(BM_OrbitMapDet3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StabilizerDet3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Rank)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Nullspace)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KempfMultistart)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
