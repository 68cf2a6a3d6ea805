#include <benchmark/benchmark.h>

#include "bloch/checks.hpp"
#include "bloch/invariants.hpp"
#include "bloch/regulator.hpp"
#include "bloch/sampling.hpp"
#include "bloch/wedge.hpp"

using namespace bloch;

namespace {

void BM_li2_double(benchmark::State& state) {
  Sampler s(1);
  const Complex<double> z = s.complex();
  for (auto _ : state) benchmark::DoNotOptimize(li2(z));
}
BENCHMARK(BM_li2_double);

void BM_bloch_wigner_mp(benchmark::State& state) {
  PrecisionScope scope(static_cast<int>(state.range(0)));
  const Complex<Mp> z(Mp(1) / 3, Mp(2) / 7);
  for (auto _ : state) benchmark::DoNotOptimize(bloch_wigner(z));
}
BENCHMARK(BM_bloch_wigner_mp)->Arg(128)->Arg(512);

void BM_cross_ratio(benchmark::State& state) {
  Sampler s(2);
  const auto q = s.cp1_points<4>();
  for (auto _ : state) benchmark::DoNotOptimize(cross_ratio(q[0], q[1], q[2], q[3]));
}
BENCHMARK(BM_cross_ratio);

void BM_fw_sum(benchmark::State& state) {
  Sampler s(3);
  const std::array<NullPoint<double>, 4> p{s.null_point(), s.null_point(), s.null_point(), s.null_point()};
  for (auto _ : state) benchmark::DoNotOptimize(fw_sum(p));
}
BENCHMARK(BM_fw_sum);

void BM_invariant_no_delta(benchmark::State& state) {
  Sampler s(4);
  Triangulation t;
  for (int i = 0; i < state.range(0); ++i) t.tetrahedra.push_back(hyperbolic_tetrahedron(s.cp1_points<4>()));
  InvariantOptions opts;
  opts.compute_delta = false;
  for (auto _ : state) benchmark::DoNotOptimize(invariant<double>(t, opts));
}
BENCHMARK(BM_invariant_no_delta)->Arg(10)->Arg(100);

void BM_delta_five_term(benchmark::State& state) {
  Sampler s(5);
  const Triangulation t = random_boundary(static_cast<Geometry>(state.range(0)), s);
  InvariantOptions opts;
  for (auto _ : state) benchmark::DoNotOptimize(delta_of(t, opts));
}
BENCHMARK(BM_delta_five_term)
    ->Arg(static_cast<int>(Geometry::hyperbolic))
    ->Arg(static_cast<int>(Geometry::cr))
    ->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
