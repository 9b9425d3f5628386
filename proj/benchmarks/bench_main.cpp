#include <benchmark/benchmark.h>

#include "invgrp/constructions.hpp"
#include "invgrp/isomorphism.hpp"
#include "invgrp/lattice.hpp"
#include "invgrp/realisability.hpp"
#include "invgrp/spec.hpp"

using namespace invgrp;

namespace {

void BM_Lattice(benchmark::State& state, const char* spec) {
  auto g = build(spec);
  for (auto _ : state) benchmark::DoNotOptimize(all_subgroups(g).subgroups.size());
}
BENCHMARK_CAPTURE(BM_Lattice, S4, "S4");
BENCHMARK_CAPTURE(BM_Lattice, S5, "S5");
BENCHMARK_CAPTURE(BM_Lattice, C2xQ8xC2, "C2 x Q8 x C2");

void BM_Automorphisms(benchmark::State& state, const char* spec) {
  auto g = build(spec);
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(g).count());
}
BENCHMARK_CAPTURE(BM_Automorphisms, Q8, "Q8");
BENCHMARK_CAPTURE(BM_Automorphisms, C2_4, "C2^4");
BENCHMARK_CAPTURE(BM_Automorphisms, SL23, "SL23");

void BM_Isomorphism(benchmark::State& state, const char* a, const char* b) {
  auto g = build(a), h = build(b);
  for (auto _ : state) benchmark::DoNotOptimize(isomorphic(g, h));
}
BENCHMARK_CAPTURE(BM_Isomorphism, Dih4_wr2C2, "Dih4", "wr2(C2)");
BENCHMARK_CAPTURE(BM_Isomorphism, C4xQ8_C4xDih4, "C4 x Q8", "C4 x Dih4");
BENCHMARK_CAPTURE(BM_Isomorphism, S3xS3xC2, "S3 x S3 x C2", "C2 x S3^2");

void BM_Catalog(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_catalog(std::size_t(state.range(0))).entries.size());
}
BENCHMARK(BM_Catalog)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_CompleteCheck(benchmark::State& state) {
  auto g = build("A4"), h = build("S4");
  for (auto _ : state) {
    Engine engine;
    benchmark::DoNotOptimize(check_completely_realisable(engine, g, h, Construction::D).all_true());
  }
}
BENCHMARK(BM_CompleteCheck)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
