// Serial reference versus OpenMP relator-rewriting kernels.

#include <benchmark/benchmark.h>

#include <map>

#include "modgroup/autf2.hpp"
#include "modgroup/cosets.hpp"
#include "modgroup/fingroups.hpp"
#include "modgroup/reidemeister.hpp"

using namespace modgroup;

namespace {

struct Fixture {
  rs::PermAction action;
  rs::SchreierSymbols sym;
  std::vector<Word> relators;
};

Fixture congruence_fixture(long m) {
  CosetTable t = congruence_table(m, m);
  rs::PermAction action = t.action();
  rs::SchreierSymbols sym = rs::schreier_symbols(action, rs::bfs_transversal(action));
  return {action, sym, {{1, 1}, {2, 2, 2}}};
}

Fixture aut_fixture(long m, long n) {
  FiniteGroup g = FiniteGroup::abelian(m, n);
  OrbitStabilizer os =
      orbit_stabilizer(g, default_epimorphism(g), {AutGen::P, AutGen::O, AutGen::R, AutGen::Ax, AutGen::Ay});
  rs::SchreierSymbols sym = rs::schreier_symbols(os.action, os.transversal);
  return {os.action, sym, aut_f2_relators()};
}

const Fixture& congruence_cached(long m) {
  static std::map<long, Fixture> cache;
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, congruence_fixture(m)).first;
  return it->second;
}

const Fixture& aut_cached(long m) {
  static std::map<long, Fixture> cache;
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, aut_fixture(m, m)).first;
  return it->second;
}

template <rs::Exec E>
void BM_RewriteRelators(benchmark::State& state) {
  const Fixture& f = congruence_cached(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rs::rewrite_relators(f.action, f.sym, f.relators, E));
  state.counters["cosets"] = f.action.n_points();
}

template <rs::Exec E>
void BM_RelationRowsAut(benchmark::State& state) {
  const Fixture& f = aut_cached(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rs::relation_rows(f.action, f.sym, f.relators, E));
  state.counters["points"] = f.action.n_points();
}

}  // namespace

BENCHMARK(BM_RewriteRelators<rs::Exec::serial>)->Name("rewrite_relators/serial")->Arg(12)->Arg(20)->Arg(30);
BENCHMARK(BM_RewriteRelators<rs::Exec::parallel>)->Name("rewrite_relators/parallel")->Arg(12)->Arg(20)->Arg(30);
BENCHMARK(BM_RelationRowsAut<rs::Exec::serial>)->Name("aut_relation_rows/serial")->Arg(6)->Arg(8);
BENCHMARK(BM_RelationRowsAut<rs::Exec::parallel>)->Name("aut_relation_rows/parallel")->Arg(6)->Arg(8);

BENCHMARK_MAIN();
