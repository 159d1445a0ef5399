#include <benchmark/benchmark.h>

#include "etnc/congruence.hpp"
#include "etnc/cyclotomic.hpp"
#include "etnc/dataset.hpp"
#include "etnc/group_ring.hpp"
#include "etnc/pipeline.hpp"
#include "etnc/recognition.hpp"

using namespace etnc;

namespace {

Dataset load(const char* name) { return load_dataset(std::string(ETNC_BENCH_DATASET_DIR) + "/" + name + ".json"); }

void BM_Verify37a1(benchmark::State& state) {
  Dataset d = load("37a1");
  for (auto _ : state) benchmark::DoNotOptimize(verify(d));
}
BENCHMARK(BM_Verify37a1)->Unit(benchmark::kMillisecond);

void BM_Verify21a1(benchmark::State& state) {
  Dataset d = load("21a1");
  for (auto _ : state) benchmark::DoNotOptimize(verify(d));
}
BENCHMARK(BM_Verify21a1)->Unit(benchmark::kMillisecond);

void BM_BsdSquares21a1(benchmark::State& state) {
  Dataset d = load("21a1");
  for (auto _ : state) benchmark::DoNotOptimize(verify_bsd_squares(d));
}
BENCHMARK(BM_BsdSquares21a1)->Unit(benchmark::kMillisecond);

void BM_RecognizeQuadraticOrbit(benchmark::State& state) {
  std::vector<DecimalWithError> xs{DecimalWithError::parse("41.8885438199983175712733893499", "1e-28"),
                                   DecimalWithError::parse("6.11145618000168242872661065015", "1e-28")};
  for (auto _ : state) benchmark::DoNotOptimize(recognize_orbit(xs, 5, Real(0)));
}
BENCHMARK(BM_RecognizeQuadraticOrbit)->Unit(benchmark::kMicrosecond);

void BM_RationalReconstruct(benchmark::State& state) {
  auto x = DecimalWithError::parse("-1.00173310225303292894280762565", "1e-25");
  for (auto _ : state) benchmark::DoNotOptimize(rational_reconstruct(x, Integer(1000000)));
}
BENCHMARK(BM_RationalReconstruct)->Unit(benchmark::kMicrosecond);

void BM_CyclotomicMultiply(benchmark::State& state) {
  const unsigned long m = static_cast<unsigned long>(state.range(0));
  std::vector<Rational> a(euler_phi(m)), b(euler_phi(m));
  for (size_t i = 0; i < a.size(); ++i) {
    a[i] = make_rational(static_cast<long>(i) + 1, 3);
    b[i] = make_rational(2 - static_cast<long>(i), 7);
  }
  CyclotomicNumber x(m, a), y(m, b);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_CyclotomicMultiply)->Arg(7)->Arg(25)->Arg(49)->Unit(benchmark::kMicrosecond);

void BM_Kolyvagin(benchmark::State& state) {
  const long m = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(kolyvagin_identity(m));
}
BENCHMARK(BM_Kolyvagin)->Arg(9)->Arg(25)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
