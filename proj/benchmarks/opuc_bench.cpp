#include <benchmark/benchmark.h>

#include "opuc/algebra.hpp"
#include "opuc/cmv.hpp"
#include "opuc/dunkl.hpp"
#include "opuc/moments.hpp"
#include "opuc/opuc.hpp"
#include "opuc/quadrature.hpp"
#include "opuc/szego.hpp"

using namespace opuc;

namespace {

const JacobiParams kParams(Rational(1), Rational(2));

void BM_BuildFamily(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_family(kParams, n));
  state.SetComplexityN(n);
}
BENCHMARK(BM_BuildFamily)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_ApplyDunkl(benchmark::State& state) {
  const auto fam = build_family(kParams, static_cast<int>(state.range(0)));
  const auto& psi = fam.psi.back();
  for (auto _ : state) benchmark::DoNotOptimize(apply_k(psi, kParams));
}
BENCHMARK(BM_ApplyDunkl)->Arg(10)->Arg(40)->Arg(100);

void BM_VerifyBispectral(benchmark::State& state) {
  const auto fam = build_family(kParams, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_bispectral(fam));
}
BENCHMARK(BM_VerifyBispectral)->Arg(10)->Arg(40);

void BM_CmvRows(benchmark::State& state) {
  const auto fam = build_family(kParams, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_gevp_and_five_term(fam));
}
BENCHMARK(BM_CmvRows)->Arg(10)->Arg(40);

void BM_TruncatedSpectrum(benchmark::State& state) {
  std::vector<Rational> a;
  for (int n = 0; n < state.range(0); ++n) a.push_back(verblunsky_jacobi(kParams, n));
  const auto c = cmv_matrix(a, a.size());
  for (auto _ : state) benchmark::DoNotOptimize(truncated_spectrum(c));
}
BENCHMARK(BM_TruncatedSpectrum)->Arg(21)->Arg(101);

void BM_CentralExtension(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_central_extension(Rational(1), Rational(2), 10, 21));
}
BENCHMARK(BM_CentralExtension);

void BM_SzegoPair(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto fam = build_family(kParams, szego_family_size(n));
  for (auto _ : state) benchmark::DoNotOptimize(build_szego_pair(fam, n));
}
BENCHMARK(BM_SzegoPair)->Arg(8)->Arg(12);

void BM_Orthogonality(benchmark::State& state) {
  const auto fam = build_family(kParams, 12);
  const auto w = Weight::jacobi(kParams);
  for (auto _ : state) benchmark::DoNotOptimize(orthogonality_check(fam, w, 12));
}
BENCHMARK(BM_Orthogonality);

void BM_GaussJacobiRule(benchmark::State& state) {
  const auto w = Weight::jacobi(kParams);
  for (auto _ : state) benchmark::DoNotOptimize(make_circle_rule(w, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GaussJacobiRule)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
