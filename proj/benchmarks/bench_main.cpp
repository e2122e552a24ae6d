#include <random>

#include <benchmark/benchmark.h>

#include "khicalc/exact_couple.hpp"
#include "khicalc/filtered_lift.hpp"
#include "khicalc/knot.hpp"

using namespace khicalc;

namespace {

Matrix random_square(Field f, std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> entry(-4, 4);
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = f.integer(entry(rng));
    return m;
}

FilteredComplex pairing_complex(Field f, std::size_t pairs, int levels)
{
    std::size_t n = 2 * pairs + 3;
    Matrix d(f, n, n);
    std::vector<int> lv(n);
    for (std::size_t p = 0; p < pairs; ++p) {
        d.at(2 * p + 1, 2 * p) = f.integer(static_cast<long>(p) + 1);
        lv[2 * p] = static_cast<int>(p) % (levels - 1);
        lv[2 * p + 1] = lv[2 * p] + 1;
    }
    for (std::size_t i = 2 * pairs; i < n; ++i)
        lv[i] = static_cast<int>(i) % levels;
    return FilteredComplex(std::move(d), std::move(lv));
}

void BM_rank_rational(benchmark::State& state)
{
    Matrix m = random_square(Field::rationals(), static_cast<std::size_t>(state.range(0)), 42);
    for (auto _ : state)
        benchmark::DoNotOptimize(m.rank());
}
BENCHMARK(BM_rank_rational)->Arg(8)->Arg(16)->Arg(32);

void BM_rank_prime(benchmark::State& state)
{
    Matrix m = random_square(Field::prime(32003), static_cast<std::size_t>(state.range(0)), 42);
    for (auto _ : state)
        benchmark::DoNotOptimize(m.rank());
}
BENCHMARK(BM_rank_prime)->Arg(8)->Arg(16)->Arg(32);

void BM_page_computation(benchmark::State& state)
{
    FilteredComplex fc = pairing_complex(Field::rationals(), 6, 4);
    UnrolledCouple couple = UnrolledCouple::from_filtered(fc);
    for (auto _ : state)
        benchmark::DoNotOptimize(couple.page(2).total_dim());
}
BENCHMARK(BM_page_computation);

void BM_lift_roundtrip(benchmark::State& state)
{
    FilteredComplex fc = pairing_complex(Field::rationals(), 5, 4);
    UnrolledCouple couple = UnrolledCouple::from_filtered(fc);
    for (auto _ : state)
        benchmark::DoNotOptimize(roundtrip_check(couple).ok);
}
BENCHMARK(BM_lift_roundtrip);

void BM_large_surgery(benchmark::State& state)
{
    KhiProfile p = synthesize_genus_one_profile(state.range(0), GenusOneCase::two_a_plus_one,
                                                std::nullopt);
    for (auto _ : state)
        benchmark::DoNotOptimize(large_surgery_dims(p, 3).total);
}
BENCHMARK(BM_large_surgery)->Arg(2)->Arg(6)->Arg(10);

} // namespace

BENCHMARK_MAIN();
