#include <benchmark/benchmark.h>

#include <random>

#include "gamma2/abelian.hpp"
#include "gamma2/assembly.hpp"
#include "gamma2/membership.hpp"
#include "gamma2/schreier.hpp"

using namespace gamma2;

namespace {

IntMatrix random_member(int n, int len, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Letter> alphabet;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) {
        alphabet.push_back({GeneratorId::E(i, j), 1});
        alphabet.push_back({GeneratorId::E(i, j), -1});
      }
  for (int i = 1; i <= n; ++i) alphabet.push_back({GeneratorId::F(i), 1});
  std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
  Word w;
  for (int k = 0; k < len; ++k) w.append(alphabet[pick(rng)]);
  return evaluate(w, n);
}

}  // namespace

static void BM_presentation(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gamma2_presentation(n));
}
BENCHMARK(BM_presentation)->Arg(2)->Arg(4)->Arg(6);

static void BM_relator_validation(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Presentation p = gamma2_presentation(n);
  for (auto _ : state)
    for (const auto& r : p.relators) benchmark::DoNotOptimize(p.eval(r).is_identity());
}
BENCHMARK(BM_relator_validation)->Arg(3)->Arg(5);

static void BM_factor(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  int len = static_cast<int>(state.range(1));
  IntMatrix a = random_member(n, len, 7);
  for (auto _ : state) benchmark::DoNotOptimize(factor(a));
}
BENCHMARK(BM_factor)->Args({2, 20})->Args({4, 20})->Args({5, 40});

static void BM_derivation(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(derive_gamma2_2());
}
BENCHMARK(BM_derivation);

static void BM_assembly(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brown_assemble(n));
}
BENCHMARK(BM_assembly)->Arg(3)->Arg(4)->Arg(5);

static void BM_abelianization(benchmark::State& state) {
  Presentation p = gamma2_presentation(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(abelianization_invariants(p));
}
BENCHMARK(BM_abelianization)->Arg(2)->Arg(4);

BENCHMARK_MAIN();
