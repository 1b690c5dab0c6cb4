// Hot paths: regular sampling, semi-invariant evaluation, hom spaces,
// pencil reduction, weight space ranks, and relation verification.
#include <benchmark/benchmark.h>

#include "semicanon/presentation.hpp"

using namespace semicanon;

namespace {

const TubeSystem& ts222() {
    static TubeSystem ts = build_canonical({{2, 2, 2}, {mpq_class(2)}});
    return ts;
}

DimVector two_h() {
    DimVector d = ts222().h;
    for (long long& x : d) x *= 2;
    return d;
}

TubeModuleSpec seg(std::size_t tube, long long socle, long long length) {
    TubeModuleSpec s;
    s.exceptional = tube;
    s.socle = socle;
    s.length = length;
    return s;
}

void bm_sample_regular(benchmark::State& state) {
    Field f = Field::prime();
    Rng rng(1);
    DimVector d = two_h();
    for (auto _ : state) benchmark::DoNotOptimize(sample_regular(ts222(), d, f, rng));
}
BENCHMARK(bm_sample_regular);

void bm_eval_c(benchmark::State& state) {
    Field f = Field::prime();
    Rng rng(2);
    DimVector d = two_h();
    SemiInvariant si = make_semi_invariant(ts222(), {seg(0, 1, 2)}, d);
    Representation m = sample_regular(ts222(), d, f, rng);
    for (auto _ : state) benchmark::DoNotOptimize(eval_c(si, m));
}
BENCHMARK(bm_eval_c);

void bm_hom_dim(benchmark::State& state) {
    Field f = Field::prime();
    Representation a = tube_module(ts222(), seg(0, 0, 3), f);
    Representation b = tube_module(ts222(), seg(0, 1, 4), f);
    for (auto _ : state) benchmark::DoNotOptimize(hom_dim(a, b));
}
BENCHMARK(bm_hom_dim);

void bm_reduced_form(benchmark::State& state) {
    Field f = Field::prime();
    Rng rng(3);
    DimVector d = two_h();
    ReducedPencil rp = reduced_pencil(ts222(), d, f, rng, 3);
    Representation m = sample_regular(ts222(), d, f, rng);
    for (auto _ : state) benchmark::DoNotOptimize(reduced_form(rp, ts222(), m));
}
BENCHMARK(bm_reduced_form);

void bm_weight_space_dim(benchmark::State& state) {
    Field f = Field::prime();
    DimVector d = two_h();
    std::uint64_t salt = 0;
    for (auto _ : state) {
        Rng rng(4 + ++salt);
        benchmark::DoNotOptimize(weight_space_dim(ts222(), d, ts222().h, f, rng));
    }
}
BENCHMARK(bm_weight_space_dim);

void bm_verify_relations(benchmark::State& state) {
    Field f = Field::prime();
    DimVector d = two_h();
    PresentationReport rep = presentation(ts222(), d);
    std::uint64_t salt = 0;
    for (auto _ : state) {
        Rng rng(5 + ++salt);
        benchmark::DoNotOptimize(verify_relations(ts222(), d, rep, f, rng, 12));
    }
}
BENCHMARK(bm_verify_relations);

}  // namespace

BENCHMARK_MAIN();
