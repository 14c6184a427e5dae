// Emission-rate benchmarks: the observable shadow of the CAT claim is that
// path emissions per second stay flat as n grows.

#include <benchmark/benchmark.h>

#include <sstream>

#include "cagegen/backbone.hpp"
#include "cagegen/base_io.hpp"

namespace {

cagegen::MotifBase jvv() {
    std::istringstream in(
        "colors: a b\n"
        "motif J: a b\n"
        "motif V1: ~a ~a b\n"
        "motif V2: a ~b ~b\n");
    return cagegen::parse_base(in);
}

void bm_gen_paths(benchmark::State& state) {
    const cagegen::MotifBase base = jvv();
    const int n = static_cast<int>(state.range(0));
    std::uint64_t emitted = 0;
    for (auto _ : state) {
        cagegen::GenOptions opt;
        cagegen::gen_paths(base, n, opt, [&](const cagegen::MapOfMotifs& m) {
            benchmark::DoNotOptimize(m.size());
            ++emitted;
        });
    }
    state.counters["emissions/s"] =
        benchmark::Counter(static_cast<double>(emitted), benchmark::Counter::kIsRate);
}
BENCHMARK(bm_gen_paths)->DenseRange(8, 14, 1)->Unit(benchmark::kMillisecond);

void bm_gen_af_paths(benchmark::State& state) {
    const cagegen::MotifBase base = jvv();
    const int n = static_cast<int>(state.range(0));
    const cagegen::ReachTable reach = cagegen::precompute_reach(base, n);
    std::uint64_t emitted = 0;
    for (auto _ : state) {
        cagegen::GenOptions opt;
        opt.prune = &reach;
        cagegen::gen_paths(base, n, opt, [&](const cagegen::MapOfMotifs& m) {
            benchmark::DoNotOptimize(m.size());
            ++emitted;
        });
    }
    state.counters["emissions/s"] =
        benchmark::Counter(static_cast<double>(emitted), benchmark::Counter::kIsRate);
}
BENCHMARK(bm_gen_af_paths)->DenseRange(8, 14, 1)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
