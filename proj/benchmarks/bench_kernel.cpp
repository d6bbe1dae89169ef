#include <benchmark/benchmark.h>

#include "ctidlab/identities.hpp"

using namespace ctidlab;

namespace {

IdentityCase make_case(Family f, CaseParams p, Method m) {
    IdentityCase c;
    c.family = f;
    c.params = std::move(p);
    c.method = m;
    validate_case(c);
    return c;
}

void BM_QPolyMul(benchmark::State& state) {
    const unsigned k = static_cast<unsigned>(state.range(0));
    QPoly a = q_pochhammer(k);
    QPoly b = q_shifted_pochhammer(2, k);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_QPolyMul)->Arg(8)->Arg(16)->Arg(32);

void BM_QMultinomial(benchmark::State& state) {
    std::vector<int> parts(static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(q_multinomial(parts));
}
BENCHMARK(BM_QMultinomial)->Arg(3)->Arg(5);

void BM_CtBruteQDyson(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    CaseParams p;
    p.avec.assign(n, 2);
    IdentityCase c = make_case(Family::q_dyson, p, Method::brute);
    for (auto _ : state) benchmark::DoNotOptimize(ct_brute(c));
}
BENCHMARK(BM_CtBruteQDyson)->Arg(2)->Arg(3);

void BM_CtInterpQDyson(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    CaseParams p;
    p.avec.assign(n, 2);
    IdentityCase c = make_case(Family::q_dyson, p, Method::interp);
    for (auto _ : state) benchmark::DoNotOptimize(ct_interp(c));
}
BENCHMARK(BM_CtInterpQDyson)->Arg(2)->Arg(3);

void BM_CtBruteOverlay(benchmark::State& state) {
    CaseParams p;
    p.n = 3;
    p.n0 = 2;
    p.m = 1;
    p.a = p.b = p.k = 2;
    IdentityCase c = make_case(Family::aomoto_forrester, p, Method::brute);
    for (auto _ : state) benchmark::DoNotOptimize(ct_brute(c));
}
BENCHMARK(BM_CtBruteOverlay);

void BM_MorrisPipeline(benchmark::State& state) {
    CaseParams p;
    p.n = 3;
    p.a = p.b = p.k = 2;
    IdentityCase c = make_case(Family::morris, p, Method::interp);
    for (auto _ : state) benchmark::DoNotOptimize(ct_interp(c));
}
BENCHMARK(BM_MorrisPipeline);

} // namespace

BENCHMARK_MAIN();
