#include <benchmark/benchmark.h>

#include "slgen/lie/closure.hpp"
#include "slgen/lie/search.hpp"
#include "slgen/mat/constructors.hpp"

namespace {

using namespace slgen;

std::vector<Matrix<GaloisField>> random_pair(const GaloisFieldPtr& f, unsigned n, std::uint64_t seed) {
  auto rng = trial_rng(seed, 0);
  auto x = random_traceless(f, n, rng);
  auto y = random_traceless(f, n, rng);
  return {x, y};
}

void BM_ClosurePackedF2(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto f2 = GaloisField::prime(2);
  const auto gens = random_pair(f2, n, 7);
  std::vector<BitMatrix> packed;
  for (const auto& g : gens) packed.push_back(BitMatrix::from_matrix(g));
  for (auto _ : state) benchmark::DoNotOptimize(closure_dimension_f2(packed));
}
BENCHMARK(BM_ClosurePackedF2)->Arg(4)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_ClosureDenseF2(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto f2 = GaloisField::prime(2);
  const auto gens = random_pair(f2, n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(closure_dimension_generic(gens));
}
BENCHMARK(BM_ClosureDenseF2)->Arg(4)->Arg(8)->Arg(12);

void BM_ClosureConsistentPair(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto f = GaloisField::prime(1009);
  std::vector<GaloisField::value_type> lambda;
  std::int64_t sum = 0, v = 1;
  for (unsigned i = 0; i + 1 < n; ++i, v *= 2) {
    lambda.push_back(f->from_int(v));
    sum += v;
  }
  lambda.push_back(f->from_int(-sum));
  const std::vector<Matrix<GaloisField>> gens{diag(f, lambda), one_matrix(f, n)};
  for (auto _ : state) benchmark::DoNotOptimize(closure_dimension(gens));
}
BENCHMARK(BM_ClosureConsistentPair)->Arg(4)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
