#include <benchmark/benchmark.h>

#include "kouch/classify.hpp"
#include "kouch/diagram.hpp"
#include "kouch/milnor.hpp"
#include "kouch/model.hpp"
#include "kouch/parser.hpp"
#include "support/generators.hpp"

using namespace kouch;
using namespace kouch::testing;

namespace {

void BM_NewtonNumber(benchmark::State& state) {
  Rng rng(1);
  std::vector<NewtonDiagram> diagrams;
  for (int k = 0; k < 64; ++k)
    diagrams.emplace_back(random_terms(rng, static_cast<int>(state.range(0)), 12));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(newton_number(diagrams[i++ % diagrams.size()]));
  }
}
BENCHMARK(BM_NewtonNumber)->Arg(2)->Arg(6)->Arg(24);

// (y^2 - x^3)(y^2 - x^3 - x^4) and products of k sheared cusps.
Polynomial cusp_product(int k) {
  Polynomial f(Rational(1));
  for (int i = 1; i <= k; ++i)
    f = f * (pow(Polynomial::y(), 2) - Polynomial(Rational(i)) * pow(Polynomial::x(), 3));
  return f;
}

void BM_MilnorResultant(benchmark::State& state) {
  Polynomial f = cusp_product(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(milnor_resultant(f));
}
BENCHMARK(BM_MilnorResultant)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_MilnorLinearAlgebra(benchmark::State& state) {
  Polynomial f = cusp_product(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(milnor_linear_algebra(f));
}
BENCHMARK(BM_MilnorLinearAlgebra)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_NGermCheck(benchmark::State& state) {
  Rng rng(2);
  std::vector<GermData> germs;
  for (int k = 0; k < 64; ++k) germs.push_back(random_valid_germ(rng, static_cast<int>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(ngerm_check(germs[i++ % germs.size()]).verdict);
}
BENCHMARK(BM_NGermCheck)->Arg(3)->Arg(6)->Arg(12);

void BM_NGermReference(benchmark::State& state) {
  Rng rng(2);
  std::vector<GermData> germs;
  for (int k = 0; k < 16; ++k) germs.push_back(random_valid_germ(rng, static_cast<int>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(ngerm_reference_check(germs[i++ % germs.size()]).verdict);
}
BENCHMARK(BM_NGermReference)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ModelRoundTrip(benchmark::State& state) {
  Rng rng(3);
  std::vector<NGermInstance> instances;
  for (int k = 0; k < 16; ++k) instances.push_back(random_ngerm(rng, 5, 9, state.range(0)));
  ReportOptions options;
  options.oracle = OracleChoice::resultant;
  std::size_t i = 0;
  for (auto _ : state) {
    const NGermInstance& inst = instances[i++ % instances.size()];
    ModelEquation m = model_equation(inst.germ, inst.witness, 1);
    benchmark::DoNotOptimize(kouchnirenko_report(m.polynomial, options).mu);
  }
}
BENCHMARK(BM_ModelRoundTrip)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
