#include <benchmark/benchmark.h>

#include "stralg/chainverify.hpp"
#include "stralg/pointed.hpp"

using namespace stralg;

namespace {

const PrimeField Fp{32003};

std::shared_ptr<const BoundQuiverAlgebra> bench_algebra() {
    Quiver q;
    q.vertices = {"x1", "x2", "x3"};
    q.arrows = {{"a", 0, 1}, {"b", 0, 1}, {"g", 1, 2}, {"d", 1, 2}};
    RelationSet r;
    PathExpr da, gb;
    da.letters = {3, 0};
    gb.letters = {2, 1};
    r.monomial = {da, gb};
    return std::make_shared<BoundQuiverAlgebra>(std::move(q), std::move(r));
}

struct BenchData {
    std::shared_ptr<const BoundQuiverAlgebra> alg = bench_algebra();
    BandPair pair{parse_word(*alg, "g a b^-1 d^-1"), parse_word(*alg, "g d^-1")};
    BandPair inv_pair{invert(pair.u), invert(pair.v)};
    PointingSource<PrimeField> pointing = projective_pointing(Fp, alg, 2);
    PointedModule<PrimeField> px =
        canonical_pointed(pointing, alg, concat(pair.u, concat(pair.u, pair.u)));
    PointedModule<PrimeField> py =
        canonical_pointed(pointing, alg, concat(inv_pair.u, concat(inv_pair.u, inv_pair.u)));
};

BenchData& data() {
    static BenchData d;
    return d;
}

} // namespace

static void BM_AlgebraConstruction(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(bench_algebra());
}
BENCHMARK(BM_AlgebraConstruction);

static void BM_EnumerateChain(benchmark::State& state) {
    auto& d = data();
    for (auto _ : state) {
        auto chain = enumerate_chain(*d.alg, d.pair, BandWord{}, BandWord{},
                                     static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(chain);
    }
}
BENCHMARK(BM_EnumerateChain)->Arg(2)->Arg(3)->Arg(4);

static void BM_StringModule(benchmark::State& state) {
    auto& d = data();
    Word w = concat(d.pair.u, concat(d.pair.v, d.pair.u));
    for (auto _ : state) benchmark::DoNotOptimize(string_module(Fp, d.alg, w));
}
BENCHMARK(BM_StringModule);

static void BM_EndomorphismSpace(benchmark::State& state) {
    auto& d = data();
    for (auto _ : state) benchmark::DoNotOptimize(hom_space(d.px.mod, d.px.mod));
}
BENCHMARK(BM_EndomorphismSpace);

static void BM_PointedPushout(benchmark::State& state) {
    auto& d = data();
    for (auto _ : state) benchmark::DoNotOptimize(pointed_pushout(d.px, d.py));
}
BENCHMARK(BM_PointedPushout);

static void BM_Indecomposability(benchmark::State& state) {
    auto& d = data();
    auto push = pointed_pushout(d.px, d.py).pm.mod;
    for (auto _ : state) benchmark::DoNotOptimize(is_indecomposable(push, 1));
}
BENCHMARK(BM_Indecomposability);

static void BM_PointedIsoCertificate(benchmark::State& state) {
    auto& d = data();
    auto push = pointed_pushout(d.px, d.py);
    Word w = concat(invert(d.px.mod.layout->word), d.py.mod.layout->word);
    auto canon = canonical_pointed(d.pointing, d.alg, w, d.px.mod.layout->word.length() + 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(pointed_isomorphism(push.pm, canon, 24, 7));
}
BENCHMARK(BM_PointedIsoCertificate);

static void BM_VerifyGridCell(benchmark::State& state) {
    auto& d = data();
    for (auto _ : state) {
        auto push = pointed_pushout(d.px, d.py);
        auto indec = is_indecomposable(push.pm.mod, 1);
        benchmark::DoNotOptimize(indec);
        Word w = concat(invert(d.px.mod.layout->word), d.py.mod.layout->word);
        auto canon =
            canonical_pointed(d.pointing, d.alg, w, d.px.mod.layout->word.length() + 1);
        benchmark::DoNotOptimize(pointed_isomorphism(push.pm, canon, 24, 7));
    }
}
BENCHMARK(BM_VerifyGridCell);

BENCHMARK_MAIN();
