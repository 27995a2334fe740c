#include <benchmark/benchmark.h>

#include "jungdesing/jung.hpp"
#include "jungdesing/parse.hpp"
#include "jungdesing/puiseux.hpp"

using namespace jd;

namespace {

const std::vector<std::string> kXZ{"x1", "x2", "z"};
const std::vector<std::string> kUVW{"u", "v", "w"};

ZPoly zp(const char* s, const std::vector<std::string>& names) { return ZPoly::from_mpoly(parse_poly(s, names)); }

void BM_ParamWorkedExample(benchmark::State& st) {
  ZPoly f = zp("z^6+3*x2*z^4+x1^2*x2^3*z^3+3*x2^2*z^2+x2^3", kXZ);
  for (auto _ : st) benchmark::DoNotOptimize(param(f));
}
BENCHMARK(BM_ParamWorkedExample)->Unit(benchmark::kMillisecond);

// lazy coefficients are memoised per series, so each iteration builds a fresh root
void BM_ExpandRoot(benchmark::State& st) {
  ZPoly f = zp("z^6-3*x2*z^4-1/64*x1^2*x2^3*z^3+3*x2^2*z^2-x2^3", kXZ);
  FracPoly a0 = parse_fracpoly("-x2^(1/2)+1/8*x1^(2/3)*x2", {"x1", "x2"});
  Q bound(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(series_new(a0, f).expand(bound));
}
BENCHMARK(BM_ExpandRoot)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_DualCone(benchmark::State& st) {
  Lattice g = Lattice::parse("0,1/2;1/3,1/6");
  for (auto _ : st) benchmark::DoNotOptimize(dual_cone_generators(g));
}
BENCHMARK(BM_DualCone);

void BM_DesingChart(benchmark::State& st) {
  MPoly f = parse_poly("w^6+3*v*w^4+u^2*v*w^3+3*v^2*w^2+v^3", kUVW);
  for (auto _ : st) benchmark::DoNotOptimize(desing_local(f, {}));
}
BENCHMARK(BM_DesingChart)->Unit(benchmark::kMillisecond);

void BM_DesingSurface(benchmark::State& st) {
  MPoly F = parse_poly("x0^6+3*x0^4*x2*x3+x0^3*x1^2*x2+3*x0^2*x2^2*x3^2+x2^3*x3^3", {"x0", "x1", "x2", "x3"});
  for (auto _ : st) benchmark::DoNotOptimize(desing_global(F));
}
BENCHMARK(BM_DesingSurface)->Unit(benchmark::kMillisecond);

}  // namespace

// the packaged benchmark_main archive is LTO bytecode from another gcc
BENCHMARK_MAIN();
