#include <benchmark/benchmark.h>

#include <vector>

#include "qho/bargmann.hpp"
#include "qho/conformal.hpp"
#include "qho/hermite.hpp"
#include "qho/ladder.hpp"
#include "qho/numerics.hpp"

namespace {

void BM_HermiteEval(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  double x = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qho::hermite_eval(l, x));
    x += 1e-9;
  }
}
BENCHMARK(BM_HermiteEval)->Arg(4)->Arg(16)->Arg(64);

void BM_BuildRule(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qho::numerics::build_rule(qho::numerics::QuadratureFamily::gauss_hermite, order));
  }
}
BENCHMARK(BM_BuildRule)->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

void BM_SegalBargmann(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qho::sb_transform(l, 1.3));
}
BENCHMARK(BM_SegalBargmann)->Arg(0)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_NumberOperator(benchmark::State& state) {
  std::vector<qho::Vec3> grid;
  for (double a : {-1.0, 0.0, 1.0})
    for (double b : {-1.0, 0.0, 1.0})
      for (double c : {-1.0, 0.0, 1.0}) grid.push_back({a, b, c});
  const qho::StateLabel s(1, 2, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qho::number_operator_check(s, qho::OscillatorParams::natural(), grid));
  }
}
BENCHMARK(BM_NumberOperator)->Unit(benchmark::kMicrosecond);

void BM_ConformalHamiltonian(benchmark::State& state) {
  const qho::Eigenfunction3D psi{qho::StateLabel(1, 1, 0), qho::OscillatorParams::natural()};
  const qho::Field f =
      qho::make_numeric_field([&psi](const qho::Vec3& x, double t) { return psi(x, t); });
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qho::conformal_hamiltonian(f, {0.2, 0.3, -0.1}, 0.4, qho::OscillatorParams::natural()));
  }
}
BENCHMARK(BM_ConformalHamiltonian)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
