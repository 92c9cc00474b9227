#include <benchmark/benchmark.h>

#include "supergraphs/closed_forms.hpp"
#include "supergraphs/distance.hpp"
#include "supergraphs/isomorphism.hpp"
#include "supergraphs/schreier_sims.hpp"
#include "supergraphs/supergraph.hpp"
#include "supergraphs/universality.hpp"

using namespace supergraphs;

static void BM_WienerBfs(benchmark::State& state) {
  FiniteGroup g = make_group(GroupSpec::dihedral(static_cast<int>(state.range(0))));
  Graph graph = family_graph(FamilyKind::cscom_dihedral, g);
  for (auto _ : state) benchmark::DoNotOptimize(wiener_index(graph));
  state.SetComplexityN(static_cast<std::int64_t>(graph.size()));
}
BENCHMARK(BM_WienerBfs)->RangeMultiplier(2)->Range(8, 128)->Complexity();

static void BM_WienerQuotientFormula(benchmark::State& state) {
  FiniteGroup g = make_group(GroupSpec::dihedral(static_cast<int>(state.range(0))));
  auto q = quotient_supergraph(g, AdjacencyKind::commuting, PartitionKind::conjugacy);
  for (auto _ : state) benchmark::DoNotOptimize(wiener_supergraph_formula(q.delta, q.sizes));
}
BENCHMARK(BM_WienerQuotientFormula)->RangeMultiplier(2)->Range(8, 128);

static void BM_Supergraph(benchmark::State& state) {
  const auto kind = kAdjacencyKinds[static_cast<std::size_t>(state.range(0))];
  FiniteGroup g = make_group(GroupSpec::symmetric(4));
  for (auto _ : state) benchmark::DoNotOptimize(build_supergraph(g, kind, PartitionKind::conjugacy));
  state.SetLabel("S4 conjugacy super" + to_string(kind));
}
BENCHMARK(BM_Supergraph)->DenseRange(0, 4);

static void BM_RestrictedVsFullScan(benchmark::State& state) {
  const auto mode = state.range(0) ? ScanMode::full : ScanMode::restricted;
  FiniteGroup g = make_group(GroupSpec::alternating(5));
  for (auto _ : state) benchmark::DoNotOptimize(build_compressed(g, AdjacencyKind::solvable, mode));
  state.SetLabel(mode == ScanMode::full ? "full" : "restricted");
}
BENCHMARK(BM_RestrictedVsFullScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_StructureIsomorphism(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Graph expr = eval_expr(structure_expr(FamilyKind::cscom_dihedral, n));
  Graph actual = family_graph(FamilyKind::cscom_dihedral, make_group(GroupSpec::dihedral(n)));
  for (auto _ : state) benchmark::DoNotOptimize(find_isomorphism(expr, actual));
}
BENCHMARK(BM_StructureIsomorphism)->Arg(8)->Arg(16)->Arg(20);

static void BM_ClassAdjacencyScan(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(class_adjacency(static_cast<std::size_t>(state.range(0)), 5, 7,
                                             AdjacencyKind::commuting));
}
BENCHMARK(BM_ClassAdjacencyScan)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);

static void BM_SchreierSims(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Permutation> gens{Permutation::cycle(n, {0, 1})};
  std::vector<Permutation::Point> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Permutation::Point>(i);
  gens.push_back(Permutation::cycle(n, all));
  for (auto _ : state) benchmark::DoNotOptimize(perm_group_order(n, gens));
}
BENCHMARK(BM_SchreierSims)->DenseRange(5, 13, 4);
BENCHMARK_MAIN();
