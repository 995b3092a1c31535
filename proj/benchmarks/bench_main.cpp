#include <benchmark/benchmark.h>

#include "jensenlab/analysis.hpp"
#include "jensenlab/experiments.hpp"
#include "jensenlab/functions.hpp"
#include "jensenlab/noise.hpp"
#include "jensenlab/sampler.hpp"

using namespace jensenlab;

static void ExhaustivePhiBox(benchmark::State& state) {
    const long radius = state.range(0);
    for (auto _ : state) {
        ExperimentReport rep = verify_phi_exact(radius);
        benchmark::DoNotOptimize(rep.pass);
    }
    const double side = static_cast<double>(2 * radius + 1);
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(side * side * side * side * side * side));
}
BENCHMARK(ExhaustivePhiBox)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void HeisenbergMultiply(benchmark::State& state) {
    const Group h = Group::heisenberg_group();
    ElementSampler s(h, 1);
    const auto xs = s.take(256);
    std::size_t i = 0;
    for (auto _ : state) {
        const GroupElement p = h.multiply(xs[i & 255], xs[(i + 1) & 255]);
        benchmark::DoNotOptimize(p);
        ++i;
    }
}
BENCHMARK(HeisenbergMultiply);

static void WreathMultiply(benchmark::State& state) {
    const Group g = Group::wreath_product(Group::integers(), 8);
    ElementSampler s(g, 2);
    const auto xs = s.take(256);
    std::size_t i = 0;
    for (auto _ : state) {
        const GroupElement p = g.multiply(xs[i & 255], xs[(i + 1) & 255]);
        benchmark::DoNotOptimize(p);
        ++i;
    }
}
BENCHMARK(WreathMultiply);

static void StabilizeNoisyJensen(benchmark::State& state) {
    const Group h = Group::heisenberg_group();
    const GroupFunction f =
        noisy_jensen(heisenberg_jensen(h, {2.0, -1.0, 0.5}), NoiseModel{0.25, 11, 1})
            .with_defect_bound(1.0);
    ElementSampler s(h, 3);
    const auto xs = s.take(64);
    std::size_t i = 0;
    for (auto _ : state) {
        const StabilizationResult r = stabilize(f, xs[i & 63]);
        benchmark::DoNotOptimize(r.value);
        ++i;
    }
}
BENCHMARK(StabilizeNoisyJensen)->Unit(benchmark::kMicrosecond);

static void NoiseEvaluation(benchmark::State& state) {
    const Group h = Group::heisenberg_group();
    const NoiseModel m{0.5, 7, 1};
    ElementSampler s(h, 4);
    const auto xs = s.take(256);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bounded_noise(m, h, xs[i & 255]));
        ++i;
    }
}
BENCHMARK(NoiseEvaluation);

static void T2PrimeFieldExhaustiveStability(benchmark::State& state) {
    for (auto _ : state) {
        T2Config cfg;
        cfg.group = "t2:fp:7";
        cfg.epsilon = 0.1;
        ExperimentReport rep = t2_stability_experiment(cfg);
        benchmark::DoNotOptimize(rep.pass);
    }
}
BENCHMARK(T2PrimeFieldExhaustiveStability)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
