#include <benchmark/benchmark.h>

#include "metalift/manifest.hpp"
#include "metalift/parser.hpp"

using namespace metalift;

namespace {

Manifest h3() { return load_manifest(METALIFT_DATA_DIR "/manifests/hyperbolic-h3.json"); }

Point sample_point() { return Point{{Rational(1, 2), Rational(-2), Rational(3)}, {Rational(1), Rational(2, 3), Rational(-1)}}; }

void BM_ParseExpression(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parse("(x1^2 + 3*x2*x3 - 1/x3)^3 / (1 + x1^2)", 3));
}
BENCHMARK(BM_ParseExpression);

void BM_EvalExact(benchmark::State& state) {
  const Expr e = parse("(x1^2 + 3*x2*x3 - 1/x3)^3 / (1 + x1^2)", 3);
  const Point p = sample_point();
  for (auto _ : state) benchmark::DoNotOptimize(eval(e, p, EvalMode::Exact));
}
BENCHMARK(BM_EvalExact);

void BM_EvalFloat(benchmark::State& state) {
  const Expr e = parse("(x1^2 + 3*x2*x3 - 1/x3)^3 / (1 + x1^2)", 3);
  const Point p = sample_point();
  for (auto _ : state) benchmark::DoNotOptimize(eval(e, p, EvalMode::Float));
}
BENCHMARK(BM_EvalFloat);

void BM_Christoffel(benchmark::State& state) {
  const ChartedManifold base = make_base(h3());
  for (auto _ : state) benchmark::DoNotOptimize(christoffel(base));
}
BENCHMARK(BM_Christoffel);

void BM_NijenhuisJ(benchmark::State& state) {
  const Manifest m = h3();
  const ParacontactStructure s = make_structure(m);
  const TangentBundle tm(s.base(), s.levi_civita());
  const MetallicOnTM j = build_J_unverified(s, tm, m.metallic.front());
  const Point p = sample_point();
  for (auto _ : state) {
    const TensorField n = nijenhuis(j.tensor);
    Evaluator<MetallicScalar> ev(p);
    for (const auto& c : n.components()) benchmark::DoNotOptimize(ev(c));
  }
}
BENCHMARK(BM_NijenhuisJ)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
