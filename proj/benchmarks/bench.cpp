#include <benchmark/benchmark.h>

#include "wildvf/corpus.hpp"
#include "wildvf/embed.hpp"
#include "wildvf/reduce.hpp"

using namespace wildvf;

namespace {

Poly dense(unsigned degree) {
    Poly p(xyz_context());
    for (unsigned a = 0; a <= degree; ++a)
        for (unsigned b = 0; a + b <= degree; ++b)
            for (unsigned c = 0; a + b + c <= degree; ++c)
                p.add_term(Monomial{{a, b, c}}, Rat(static_cast<long>(a + 2 * b + 3 * c + 1), 1 + c));
    return p;
}

MatrixPair pair_of_size(std::size_t n) { return generate(PairRecipe::strictly_upper(n, 42)); }

void BM_PolyMul(benchmark::State& state) {
    const Poly p = dense(static_cast<unsigned>(state.range(0)));
    const Poly q = dense(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(p * q);
    state.counters["terms"] = static_cast<double>(p.term_count());
}
BENCHMARK(BM_PolyMul)->DenseRange(2, 8, 2);

void BM_Embed(benchmark::State& state) {
    const MatrixPair p = pair_of_size(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(embed(p));
}
BENCHMARK(BM_Embed)->DenseRange(2, 8, 1);

void BM_Realize(benchmark::State& state) {
    const MatrixPair p = pair_of_size(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(realize(p));
}
BENCHMARK(BM_Realize)->DenseRange(2, 8, 1);

void BM_VerifyRealization(benchmark::State& state) {
    const RealizedAlgebra ra = realize(pair_of_size(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(verify_realization(ra));
}
BENCHMARK(BM_VerifyRealization)->DenseRange(2, 8, 2);

void BM_Similar(benchmark::State& state) {
    const MatrixPair a = pair_of_size(static_cast<std::size_t>(state.range(0)));
    CounterRng rng(7);
    const MatrixPair b = conjugate(a, random_invertible(rng, a.n()));
    for (auto _ : state) benchmark::DoNotOptimize(similar(a, b));
}
BENCHMARK(BM_Similar)->DenseRange(2, 6, 2);

}  // namespace

BENCHMARK_MAIN();
