#include <benchmark/benchmark.h>

#include "gammafuzz/enumerate.hpp"
#include "gammafuzz/fuzzy_ops.hpp"
#include "gammafuzz/verify.hpp"

using namespace gammafuzz;

namespace {

// S = Γ = {0..n-1}, a+b = max, aγb = min(a,γ,b). Valid for every n >= 1.
GammaSemiring max_min(std::size_t n) {
    SemiringTables t;
    t.name = "maxmin" + std::to_string(n);
    t.s_size = t.g_size = n;
    t.s_add.assign(n, std::vector<std::size_t>(n));
    t.g_add.assign(n, std::vector<std::size_t>(n));
    t.product.assign(n, std::vector<std::vector<std::size_t>>(n, std::vector<std::size_t>(n)));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            t.s_add[a][b] = t.g_add[a][b] = std::max(a, b);
            for (std::size_t c = 0; c < n; ++c) t.product[a][b][c] = std::min({a, b, c});
        }
    t.unities.push_back(UnityDecl{Side::left, {{ElemS{n - 1}, ElemG{n - 1}}}});
    return GammaSemiring(t);
}

std::vector<FuzzySubset> family(const GammaSemiring& g, const char* chain) {
    return enumerate_ideals(g, Chain::parse(chain), IdealKind::two_sided).members;
}

void BM_Compose(benchmark::State& state) {
    const auto g = max_min(static_cast<std::size_t>(state.range(0)));
    const auto fam = family(g, "0,1/3,2/3,1");
    for (auto _ : state)
        for (const auto& a : fam) benchmark::DoNotOptimize(compose(a, fam.back()));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * fam.size()));
}
BENCHMARK(BM_Compose)->DenseRange(2, 5);

void BM_ComposeOracle(benchmark::State& state) {
    const auto g = max_min(static_cast<std::size_t>(state.range(0)));
    const auto fam = family(g, "0,1/3,2/3,1");
    for (auto _ : state)
        for (const auto& a : fam) benchmark::DoNotOptimize(compose_oracle(a, fam.back(), g.s_size()));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * fam.size()));
}
BENCHMARK(BM_ComposeOracle)->DenseRange(2, 5);

void BM_Enumerate(benchmark::State& state) {
    const auto g = max_min(5);
    const EnumerateOptions opts{default_candidate_budget, true, static_cast<unsigned>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_ideals(g, Chain::parse("0,1/4,1/2,3/4,1"), IdealKind::left, opts));
}
BENCHMARK(BM_Enumerate)->Arg(1)->Arg(4)->UseRealTime();

void BM_Suite(benchmark::State& state) {
    const auto g = max_min(3);
    const std::vector<std::string> all{"all"};
    for (auto _ : state) {
        const LawContext ctx(g, Chain::parse("0,1/2,1"), VerifyOptions{static_cast<unsigned>(state.range(0))});
        benchmark::DoNotOptimize(run_suite(ctx, all));
    }
}
BENCHMARK(BM_Suite)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

} // namespace

BENCHMARK_MAIN();
