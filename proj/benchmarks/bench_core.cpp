#include <benchmark/benchmark.h>

#include <random>

#include "padelab/pade.hpp"
#include "padelab/rational_fn.hpp"

using namespace padelab;

namespace {

PowerSeries<Complex> random_float_series(int order, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    for (auto& x : c) x = Complex(coeff(rng), coeff(rng));
    return {Complex{0.0, 0.0}, std::move(c)};
}

PowerSeries<GaussianRational> random_exact_series(int order, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 6);
    std::vector<GaussianRational> c(static_cast<std::size_t>(order) + 1);
    for (auto& x : c)
        x = GaussianRational(BigRational(num(rng), den(rng)), BigRational(num(rng), den(rng)));
    return {GaussianRational(), std::move(c)};
}

void bm_hankel_float(benchmark::State& state) {
    const int q = static_cast<int>(state.range(0));
    const auto f = random_float_series(2 * q, 7);
    for (auto _ : state) benchmark::DoNotOptimize(hankel_determinant(f, q, q));
}
BENCHMARK(bm_hankel_float)->Arg(2)->Arg(5)->Arg(10);

void bm_hankel_exact(benchmark::State& state) {
    const int q = static_cast<int>(state.range(0));
    const auto f = random_exact_series(2 * q, 7);
    for (auto _ : state) benchmark::DoNotOptimize(hankel_determinant(f, q, q));
}
BENCHMARK(bm_hankel_exact)->Arg(2)->Arg(5)->Arg(10);

void bm_construct_float(benchmark::State& state) {
    const int q = static_cast<int>(state.range(0));
    const auto f = random_float_series(2 * q, 11);
    for (auto _ : state) benchmark::DoNotOptimize(pade_from_series(f, q, q));
}
BENCHMARK(bm_construct_float)->Arg(2)->Arg(5);

void bm_construct_exact(benchmark::State& state) {
    const int q = static_cast<int>(state.range(0));
    const auto f = random_exact_series(2 * q, 11);
    for (auto _ : state) benchmark::DoNotOptimize(pade_from_series(f, q, q));
}
BENCHMARK(bm_construct_exact)->Arg(2)->Arg(5);

void bm_jacobi_vs_direct(benchmark::State& state) {
    const int q = static_cast<int>(state.range(0));
    const auto f = random_float_series(2 * q, 13);
    const auto r = pade_from_series(f, q, q);
    const Complex z{0.3, 0.2};
    if (state.range(1) == 0) {
        for (auto _ : state) benchmark::DoNotOptimize(evaluate(r, z));
    } else {
        for (auto _ : state) benchmark::DoNotOptimize(jacobi_evaluate(f, q, q, z));
    }
}
BENCHMARK(bm_jacobi_vs_direct)->Args({4, 0})->Args({4, 1});

void bm_taylor_exact(benchmark::State& state) {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> num(-6, 6);
    std::vector<GaussianRational> a(4), b(3);
    for (auto& x : a) x = GaussianRational(num(rng));
    for (auto& x : b) x = GaussianRational(num(rng));
    b.back() = GaussianRational(1);
    const auto f = RationalFn<GaussianRational>::reduce(Polynomial<GaussianRational>(a),
                                                        Polynomial<GaussianRational>(b));
    const GaussianRational zeta(BigRational(1, 3), BigRational(1, 7));
    for (auto _ : state) benchmark::DoNotOptimize(taylor_at(f, zeta, 12));
}
BENCHMARK(bm_taylor_exact);

} // namespace

BENCHMARK_MAIN();
