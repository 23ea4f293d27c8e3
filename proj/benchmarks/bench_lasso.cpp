#include <benchmark/benchmark.h>

#include "cordlasso/builders.hpp"
#include "cordlasso/lasso.hpp"
#include "cordlasso/newick.hpp"
#include "cordlasso/oracle.hpp"

using namespace cordlasso;

namespace {

std::vector<LeafLabel> labels(std::size_t n) {
  std::vector<LeafLabel> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("t" + std::to_string(i));
  return out;
}

/// Balanced binary tree on n leaves as Newick text.
std::string balanced(const std::vector<LeafLabel>& x, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return x[lo];
  const std::size_t mid = (lo + hi) / 2;
  return "(" + balanced(x, lo, mid) + "," + balanced(x, mid, hi) + ")";
}

void BM_ClassifyBalanced(benchmark::State& state) {
  const auto x = labels(static_cast<std::size_t>(state.range(0)));
  const XTree t = parse_newick(balanced(x, 0, x.size()) + ";").tree;
  const CordSet l = circular_lasso(circular_order(t));
  for (auto _ : state) benchmark::DoNotOptimize(classify(t, l));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ClassifyBalanced)->RangeMultiplier(4)->Range(8, 2048)->Complexity();

void BM_ParseNewick(benchmark::State& state) {
  const auto x = labels(static_cast<std::size_t>(state.range(0)));
  const std::string text = balanced(x, 0, x.size()) + ";";
  for (auto _ : state) benchmark::DoNotOptimize(parse_newick(text));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseNewick)->RangeMultiplier(4)->Range(8, 2048);

void BM_OracleClassifyFiveLeaves(benchmark::State& state) {
  const RivalCatalog catalog(labels(5));
  const XTree& t = catalog.trees()[static_cast<std::size_t>(state.range(0))];
  const CordSet l = random_cord_set(catalog.leaf_set(), 5, 11);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_classify(t, l, {1, &catalog}));
}
BENCHMARK(BM_OracleClassifyFiveLeaves)->Arg(0)->Arg(100)->Arg(235);

void BM_EnumerateTrees(benchmark::State& state) {
  const auto x = labels(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_xtrees(x));
}
BENCHMARK(BM_EnumerateTrees)->DenseRange(4, 6);

}  // namespace

BENCHMARK_MAIN();
