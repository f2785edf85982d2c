// Microbenchmarks for the hot paths: exact determinants, adjoints, the
// TP checker, path enumeration, and the search objective.
#include <benchmark/benchmark.h>

#include <random>

#include "treetp/search.hpp"
#include "treetp/tpcheck.hpp"
#include "treetp/ttp.hpp"

using namespace treetp;

namespace {

ExactMatrix random_matrix(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 12);
    ExactMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = make_rational(num(rng), den(rng));
    return m;
}

LabelledTree star(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 2; v <= n; ++v) edges.emplace_back(1, v);
    return LabelledTree(n, std::move(edges));
}

void bm_det(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    ExactMatrix m = random_matrix(n, 1);
    for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(bm_det)->Arg(4)->Arg(6)->Arg(8)->Arg(12);

void bm_adjoint(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    ExactMatrix m = random_matrix(n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(adjoint(m));
}
BENCHMARK(bm_adjoint)->Arg(4)->Arg(6)->Arg(8);

void bm_is_tp(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    ExactMatrix m = generate_tp(n, 3);
    for (auto _ : state) benchmark::DoNotOptimize(is_tp(m));
}
BENCHMARK(bm_is_tp)->Arg(4)->Arg(5)->Arg(6)->Arg(7);

void bm_is_ttp_star(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    LabelledTree t = star(n);
    SearchConfig cfg;
    cfg.budget = 50000;
    SearchOutcome out = search_ttp(t, cfg);
    ExactMatrix m = out.matrix.value_or(generate_tp(n, 4));
    for (auto _ : state) benchmark::DoNotOptimize(is_ttp(m, t));
}
BENCHMARK(bm_is_ttp_star)->Arg(4)->Arg(5)->Arg(6);

void bm_violation_score(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    LabelledTree t = star(n);
    ExactMatrix m = generate_tp(n, 5);
    for (auto _ : state) benchmark::DoNotOptimize(violation_score(m, t));
}
BENCHMARK(bm_violation_score)->Arg(4)->Arg(5)->Arg(6);

void bm_enumerate_paths(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back((v + 1) / 2, v + 1);  // balanced-ish
    LabelledTree t(n, std::move(edges));
    for (auto _ : state) benchmark::DoNotOptimize(t.enumerate_paths());
}
BENCHMARK(bm_enumerate_paths)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
