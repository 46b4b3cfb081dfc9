#include <benchmark/benchmark.h>

#include "tilekit/block.hpp"
#include "tilekit/compact.hpp"
#include "tilekit/design.hpp"
#include "tilekit/sim.hpp"
#include "tilekit/tiles_io.hpp"

using namespace tilekit;

namespace {

const char* kXor = "east: e1\nsouth: s1\nnorth: e1 xor s1\nwest: e1 xor s1\n";
const char* kFrames = "5 0 5 4; 3 6 0 6; 5 0 0 6";
constexpr std::size_t kCorner = 6;

const TileSystem& sierpinski() {
  static const TileSystem s = compile_design(parse_design(kXor), kFrames).system;
  return s;
}

std::size_t block_seed(const BlockMap& map) {
  for (std::size_t i = 0; i < map.entries.size(); ++i) {
    const BlockCoord& c = map.entries[i];
    if (c.original == kCorner && c.row == 1 && c.col == map.block_size) return i;
  }
  return 0;
}

void BM_SimulateSierpinski(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SimOptions o;
  o.seed = kCorner;
  o.box = Box::north_west(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(simulate(sierpinski(), o));
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_SimulateSierpinski)->Arg(32)->Arg(64)->Arg(128);

void BM_SimulateSnake(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const BlockTransform b = snake(sierpinski(), m);
  SimOptions o;
  o.seed = block_seed(b.map);
  o.box = Box::north_west(16 * m, 16 * m);
  for (auto _ : state) benchmark::DoNotOptimize(simulate(b.system, o));
}
BENCHMARK(BM_SimulateSnake)->Arg(2)->Arg(4);

void BM_Proofread(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(proofread(sierpinski(), m));
}
BENCHMARK(BM_Proofread)->Arg(2)->Arg(4)->Arg(8);

void BM_CompileWide(benchmark::State& state) {
  const TileDesign d = parse_design(
      "east: a, b, c, d\nsouth: e, f, g, h\nnorth: a xor e, b and f, c or g, not d\nwest: a, b, c, d xor h\n");
  for (auto _ : state) benchmark::DoNotOptimize(compile_design(d, ""));
}
BENCHMARK(BM_CompileWide);

void BM_EmitParse(benchmark::State& state) {
  const TileSystem s = snake(sierpinski(), 4).system;
  for (auto _ : state) benchmark::DoNotOptimize(parse_tiles(emit_tiles(s)));
}
BENCHMARK(BM_EmitParse);

void BM_CompactTransform(benchmark::State& state) {
  const CompactDesign cd{parse_design(kXor), static_cast<int>(state.range(0)), {1}, {1}};
  for (auto _ : state) benchmark::DoNotOptimize(compact_transform(cd));
}
BENCHMARK(BM_CompactTransform)->Arg(2)->Arg(3);

void BM_Resilience(benchmark::State& state) {
  const CompactDesign cd{parse_design(kXor), static_cast<int>(state.range(0)), {1}, {1}};
  for (auto _ : state) benchmark::DoNotOptimize(resilience_analysis(cd, static_cast<int>(state.range(1))));
}
BENCHMARK(BM_Resilience)->Args({2, 6})->Args({3, 6})->Args({3, 8});

}  // namespace
BENCHMARK_MAIN();
