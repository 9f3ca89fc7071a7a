#include <benchmark/benchmark.h>

#include "boolsch/constants.hpp"
#include "boolsch/fast_type_a.hpp"
#include "boolsch/kostant_kumar.hpp"
#include "boolsch/triples.hpp"
#include "boolsch/weyl_group.hpp"

namespace {

using namespace boolsch;

void BM_FindInsertionPathTypeA(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RootSystem rs(LieType::A, n);
  TripleGenerator gen(0x5eedULL + n);
  std::vector<BooleanTriple> corpus;
  for (int k = 0; k < 64; ++k) corpus.push_back(gen.complementary_triple(rs));

  size_t at = 0;
  for (auto _ : state) {
    const BooleanTriple& t = corpus[at++ % corpus.size()];
    benchmark::DoNotOptimize(find_insertion_path_type_a(rs, t.u, t.v, t.w));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_FindInsertionPathTypeA)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_EquivariantConstant(benchmark::State& state) {
  RootSystem rs(LieType::C, 4);
  BooleanElement u = BooleanElement::from_reduced_word(rs, {2, 3, 4});
  BooleanElement v = BooleanElement::from_reduced_word(rs, {4});
  for (auto _ : state)
    benchmark::DoNotOptimize(equivariant_constant(rs, u, v, u));
}
BENCHMARK(BM_EquivariantConstant);

void BM_RecursionConstant(benchmark::State& state) {
  RootSystem rs(LieType::A, 13);
  BooleanElement u = BooleanElement::from_reduced_word(rs, {4, 3, 8, 11, 12});
  BooleanElement v = BooleanElement::from_reduced_word(rs, {2, 3, 7, 6, 8, 12});
  BooleanElement w =
      BooleanElement::from_reduced_word(rs, {7, 6, 5, 4, 2, 3, 9, 8, 11, 13, 12});
  for (auto _ : state)
    benchmark::DoNotOptimize(kk_constant(rs, u, v, w));
}
BENCHMARK(BM_RecursionConstant);

void BM_EnumerateBoolean(benchmark::State& state) {
  RootSystem rs(LieType::A, static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_boolean(rs));
}
BENCHMARK(BM_EnumerateBoolean)->Arg(6)->Arg(8);

void BM_EnumerateWeylGroup(benchmark::State& state) {
  RootSystem rs(LieType::B, 3);
  for (auto _ : state) {
    WeylGroup g(rs);
    benchmark::DoNotOptimize(g.size());
  }
}
BENCHMARK(BM_EnumerateWeylGroup);

}  // namespace

BENCHMARK_MAIN();
