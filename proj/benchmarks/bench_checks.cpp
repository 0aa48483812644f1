#include <benchmark/benchmark.h>

#include "allab/catalog.hpp"
#include "allab/congruence.hpp"
#include "allab/ideal.hpp"
#include "allab/sasaki.hpp"
#include "allab/term.hpp"

using namespace allab;

namespace {

void BM_CheckAdjoint(benchmark::State& state) {
  const auto L = fig2(Fig2Variant::first);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_adjoint(L).holds);
  }
}
BENCHMARK(BM_CheckAdjoint);

void BM_CheckIdentityB(benchmark::State& state) {
  const auto L = fig2(Fig2Variant::first);
  const auto id = std::get<Identity>(parse_statement("x v y' = y' v ((x v y') ^ y)"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_identity(L, id).holds);
  }
}
BENCHMARK(BM_CheckIdentityB);

void BM_VarietyMembership(benchmark::State& state) {
  const auto L = fig2(Fig2Variant::second);
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_member_of_v(L));
  }
}
BENCHMARK(BM_VarietyMembership);

void BM_PrincipalCongruence(benchmark::State& state) {
  const auto L = fig2(Fig2Variant::first);
  const int d = L.index_of("d");
  for (auto _ : state) {
    benchmark::DoNotOptimize(principal_congruence(L, d, L.top).block_count());
  }
}
BENCHMARK(BM_PrincipalCongruence);

void BM_AllCongruences(benchmark::State& state) {
  const auto L = fig2(Fig2Variant::second);
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_congruences(L).size());
  }
}
BENCHMARK(BM_AllCongruences);

void BM_AllIdeals(benchmark::State& state) {
  const auto L = fig2(Fig2Variant::second);
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_ideals(L).size());
  }
}
BENCHMARK(BM_AllIdeals);

void BM_IdealClosure(benchmark::State& state) {
  const auto L = fig2(Fig2Variant::first);
  const ElemSet seed = 1u << L.index_of("d");
  for (auto _ : state) {
    benchmark::DoNotOptimize(set_size(ideal_closure(L, seed)));
  }
}
BENCHMARK(BM_IdealClosure);

void BM_EnumerateLattices(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_bounded_lattices(n).size());
  }
}
BENCHMARK(BM_EnumerateLattices)->Arg(5)->Arg(6)->Arg(7);

void BM_Theorem2Terms(benchmark::State& state) {
  const auto L = make_m_n(6, derangements_up_to_conjugacy(6).front());
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_theorem2_terms(L).regularity_ok);
  }
}
BENCHMARK(BM_Theorem2Terms);

}  // namespace

BENCHMARK_MAIN();
