#include <benchmark/benchmark.h>

#include <random>

#include "rbtensor/ht_decomp.hpp"
#include "rbtensor/rb_tensor.hpp"

namespace {

rbt::RBTensor random_tensor(std::size_t n1, std::size_t n2, std::size_t n3, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    rbt::RBTensor t(n1, n2, n3);
    for (auto& v : t.part1()) v = {g(rng), g(rng)};
    for (auto& v : t.part2()) v = {g(rng), g(rng)};
    return t;
}

void BM_HtSvd(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto n3 = static_cast<std::size_t>(state.range(1));
    const rbt::RBTensor a = random_tensor(n, n, n3, 1);
    for (auto _ : state) benchmark::DoNotOptimize(rbt::ht_svd(a));
    state.SetComplexityN(state.range(1));
}
BENCHMARK(BM_HtSvd)->ArgsProduct({{32}, {4, 8, 16, 32}})->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_HtSvd)->Args({64, 16})->Unit(benchmark::kMillisecond);

void BM_HtProduct(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto n3 = static_cast<std::size_t>(state.range(1));
    const rbt::RBTensor a = random_tensor(n, n, n3, 2);
    const rbt::RBTensor b = random_tensor(n, n, n3, 3);
    for (auto _ : state) benchmark::DoNotOptimize(rbt::ht_product(a, b));
}
BENCHMARK(BM_HtProduct)->ArgsProduct({{16, 32}, {4, 16, 64}})->Unit(benchmark::kMicrosecond);

void BM_HtProductDirect(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto n3 = static_cast<std::size_t>(state.range(1));
    const rbt::RBTensor a = random_tensor(n, n, n3, 2);
    const rbt::RBTensor b = random_tensor(n, n, n3, 3);
    for (auto _ : state) benchmark::DoNotOptimize(rbt::ht_product_direct(a, b));
}
BENCHMARK(BM_HtProductDirect)->ArgsProduct({{16, 32}, {4, 16}})->Unit(benchmark::kMicrosecond);

void BM_TensorPinv(benchmark::State& state) {
    const auto n3 = static_cast<std::size_t>(state.range(0));
    const rbt::RBTensor a = random_tensor(32, 24, n3, 4);
    for (auto _ : state) benchmark::DoNotOptimize(rbt::tensor_pinv(a));
}
BENCHMARK(BM_TensorPinv)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
