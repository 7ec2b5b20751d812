#include <benchmark/benchmark.h>

#include "qlucas/modarith.hpp"

using namespace qlucas;

namespace {

void BM_Pow(benchmark::State& state)
{
    const PrimeField f(static_cast<u64>(state.range(0)));
    u64 a = 3;
    for (auto _ : state) {
        a = f.pow(a + 1, f.modulus() - 2);
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_Pow)->Arg(19997)->Arg(1000000007)->Arg((int64_t{1} << 62) - 57);

void BM_Sqrt(benchmark::State& state)
{
    const PrimeField f(static_cast<u64>(state.range(0)));
    u64 a = 2;
    for (auto _ : state) {
        a = f.add(a, 1);
        benchmark::DoNotOptimize(f.sqrt(f.mul(a, a)));
    }
}
BENCHMARK(BM_Sqrt)->Arg(19997)->Arg(998244353)->Arg((int64_t{1} << 62) - 57);

void BM_Legendre(benchmark::State& state)
{
    const PrimeField f(1000000007);
    u64 a = 2;
    for (auto _ : state) {
        a = f.add(a, 7);
        benchmark::DoNotOptimize(f.legendre(a));
    }
}
BENCHMARK(BM_Legendre);

void BM_IsPrime(benchmark::State& state)
{
    u64 n = (u64{1} << 61) - 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_prime(n));
        n += 2;
    }
}
BENCHMARK(BM_IsPrime);

} // namespace
