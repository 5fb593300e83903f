#include <benchmark/benchmark.h>

#include <random>

#include "qvlab/asymfit.hpp"
#include "qvlab/bracket.hpp"
#include "qvlab/cjones.hpp"
#include "qvlab/dilog.hpp"
#include "qvlab/knot_table.hpp"
#include "qvlab/qrec.hpp"
#include "qvlab/quantize.hpp"

using namespace qvl;

namespace {

const KnotTable& table() {
  static const KnotTable t = KnotTable::load(QVLAB_BENCH_TABLE);
  return t;
}

void BM_JonesCable41(benchmark::State& state) {
  const PlanarDiagram c = cable(table().get("4_1").diagram, 2);
  for (auto _ : state) benchmark::DoNotOptimize(jones(c));
}
BENCHMARK(BM_JonesCable41)->Unit(benchmark::kMillisecond);

void BM_Kashaev(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  PrecisionScope scope(64);
  for (auto _ : state) benchmark::DoNotOptimize(kashaev_41(n, 64));
}
BENCHMARK(BM_Kashaev)->Arg(100)->Arg(400)->Arg(800)->Unit(benchmark::kMillisecond);

void BM_Dilog(benchmark::State& state) {
  const auto digits = static_cast<unsigned>(state.range(0));
  PrecisionScope scope(digits);
  const BigComplex z(Real("0.3"), Real("0.8"));
  for (auto _ : state) benchmark::DoNotOptimize(dilog(z, digits));
}
BENCHMARK(BM_Dilog)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

void BM_FitKashaev(benchmark::State& state) {
  PrecisionScope scope(64);
  std::vector<int> ns;
  for (int n = 100; n <= 400; n += 10) ns.push_back(n);
  const auto samples = build_sequence(BigComplex::i_pi(), ns, 64);
  FitOptions opt;
  opt.model_order = 3;
  for (auto _ : state) benchmark::DoNotOptimize(fit_expansion(samples, opt));
}
BENCHMARK(BM_FitKashaev)->Unit(benchmark::kMillisecond);

void BM_RecursionUnknot(benchmark::State& state) {
  const JSequence seq = JSequence::unknot(12);
  DiscoveryOptions opt;
  opt.order = 2;
  opt.m_degree = 0;
  for (auto _ : state) benchmark::DoNotOptimize(discover_recursion(seq, opt));
}
BENCHMARK(BM_RecursionUnknot)->Unit(benchmark::kMillisecond);

void BM_MoyalDegree(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const int deg = static_cast<int>(state.range(0));
  const PolyObs f = PolyObs::random(2, deg, rng);
  const PolyObs g = PolyObs::random(2, deg, rng);
  const PoissonBivector alpha = PoissonBivector::canonical(2);
  for (auto _ : state) benchmark::DoNotOptimize(moyal(f, g, alpha));
}
BENCHMARK(BM_MoyalDegree)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_GraphOperatorOrder3(benchmark::State& state) {
  const auto graphs = enumerate_graphs(3);
  const PoissonBivector alpha = PoissonBivector::canonical(2);
  const PolyObs x = PolyObs::variable(0);
  const PolyObs p = PolyObs::variable(1);
  const PolyObs f = x * x * x * p;
  const PolyObs g = p * p * p * x;
  for (auto _ : state) {
    for (const auto& gamma : graphs) benchmark::DoNotOptimize(graph_operator(gamma, alpha, f, g));
  }
}
BENCHMARK(BM_GraphOperatorOrder3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
