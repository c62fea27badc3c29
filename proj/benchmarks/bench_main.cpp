#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "niep/blockcomp.hpp"
#include "niep/circulant.hpp"
#include "niep/eig.hpp"
#include "niep/permutative.hpp"

namespace {

using niep::Complex;
using niep::DenseMatrix;

DenseMatrix random_matrix(std::size_t n, bool complex_entries) {
    std::mt19937_64 rng(n * 7919 + (complex_entries ? 1 : 0));
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    DenseMatrix m(n, n);
    for (Complex& z : m.entries())
        z = complex_entries ? Complex{dist(rng), dist(rng)} : Complex{dist(rng), 0.0};
    return m;
}

void BM_Eigenvalues(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const DenseMatrix a = random_matrix(n, true);
    for (auto _ : state) {
        auto eigs = niep::eigenvalues(a);
        benchmark::DoNotOptimize(eigs);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Eigenvalues)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_CharpolyOracle(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const DenseMatrix a = random_matrix(n, true);
    for (auto _ : state) {
        auto poly = niep::charpoly_oracle(a);
        benchmark::DoNotOptimize(poly);
    }
}
BENCHMARK(BM_CharpolyOracle)->DenseRange(4, 12, 4);

void BM_ComposeEven(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(n);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    DenseMatrix S(n, n), C(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double s = dist(rng);
            S(i, j) = s;
            C(i, j) = s * (2.0 * dist(rng) - 1.0);
        }
    const niep::CompositionParams p{0.5, +1};
    for (auto _ : state) {
        auto m = niep::compose_even(S, C, p);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_ComposeEven)->RangeMultiplier(2)->Range(4, 64);

void BM_DetectPermutative(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<Complex> row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = static_cast<double>((i * 13) % 7);  // duplicates
    const DenseMatrix m = niep::circulant_matrix(niep::CirculantRow{std::move(row)});
    for (auto _ : state) {
        auto tau = niep::detect_permutative(m, 1e-12);
        benchmark::DoNotOptimize(tau);
    }
}
BENCHMARK(BM_DetectPermutative)->RangeMultiplier(2)->Range(4, 64);

void BM_DftRoundTrip(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(n);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    std::vector<double> entries(n);
    for (double& v : entries) v = dist(rng);
    const niep::Spectrum sigma = niep::circulant_spectrum(niep::CirculantRow::from_reals(entries));
    for (auto _ : state) {
        auto row = niep::circulant_from_spectrum(sigma);
        benchmark::DoNotOptimize(row);
    }
}
BENCHMARK(BM_DftRoundTrip)->RangeMultiplier(2)->Range(8, 128);

}  // namespace

BENCHMARK_MAIN();
