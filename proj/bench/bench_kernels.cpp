// Serial reference paths vs the OpenMP kernels.
#include <benchmark/benchmark.h>

#include "gamas/characters.hpp"
#include "gamas/kernels.hpp"
#include "gamas/random.hpp"
#include "gamas/tensor.hpp"

using namespace gamas;

namespace {

VectorConfiguration bench_config(int n, int d) {
    TrialRng rng(mix_seed(7, {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(d)}));
    std::vector<ExactVector> vs;
    for (int i = 0; i < n; ++i) {
        ExactVector v(static_cast<std::size_t>(d));
        for (auto& x : v) x = Rational(static_cast<long>(rng.uniform_int(-3, 3)));
        vs.push_back(std::move(v));
    }
    return {d, std::move(vs)};
}

Partition hook(int n) {
    std::vector<int> parts{n - 1 > 0 ? n - 1 : 1};
    if (n > 1) parts.push_back(1);
    return Partition(parts);
}

void BM_symmetrize_reference(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto cfg = bench_config(n, 3);
    for (auto _ : state) benchmark::DoNotOptimize(apply_t_lambda_reference(cfg, hook(n)));
}

void BM_class_sums(benchmark::State& state, Execution exec) {
    const int n = static_cast<int>(state.range(0));
    const auto cfg = bench_config(n, 3);
    for (auto _ : state) benchmark::DoNotOptimize(class_sum_tensor(cfg, exec));
}

void BM_gmf(benchmark::State& state, Execution exec) {
    const int n = static_cast<int>(state.range(0));
    const auto g = gram_matrix(bench_config(n, 3));
    for (auto _ : state) benchmark::DoNotOptimize(matrix_class_sums(g, exec));
}

void BM_gmf_reference(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto g = gram_matrix(bench_config(n, 3));
    for (auto _ : state) benchmark::DoNotOptimize(generalized_matrix_function_reference(g, hook(n)));
}

void BM_apply_sparse(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto w = decomposable(bench_config(n, 2));
    const auto e = central_idempotent(hook(n));
    for (auto _ : state) benchmark::DoNotOptimize(apply_algebra_element_reference(w, e));
}

void BM_apply_dense(benchmark::State& state, Execution exec) {
    const int n = static_cast<int>(state.range(0));
    const auto w = decomposable(bench_config(n, 2));
    const auto e = central_idempotent(hook(n));
    for (auto _ : state) benchmark::DoNotOptimize(apply_dense(w, e, exec));
}

}  // namespace

BENCHMARK(BM_symmetrize_reference)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_class_sums, serial, Execution::serial)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_class_sums, parallel, Execution::parallel)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_gmf_reference)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_gmf, serial, Execution::serial)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_gmf, parallel, Execution::parallel)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_apply_sparse)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_apply_dense, serial, Execution::serial)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_apply_dense, parallel, Execution::parallel)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
