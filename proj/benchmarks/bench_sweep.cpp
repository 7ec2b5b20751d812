#include <benchmark/benchmark.h>

#include "qlucas/harness.hpp"
#include "qlucas/sieve.hpp"

using namespace qlucas;

namespace {

void BM_Sieve(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(primes_up_to(static_cast<u64>(state.range(0))));
}
BENCHMARK(BM_Sieve)->Arg(20000)->Arg(1000000)->Arg(10000000);

void BM_VerifyOne(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(verify_one(1, 19997));
}
BENCHMARK(BM_VerifyOne);

void BM_SweepConjectureOne(benchmark::State& state)
{
    SweepSpec s;
    s.conjectures = {1};
    s.p_max = 19999;
    s.jobs = static_cast<unsigned>(state.range(0));
    s.keep_records = false;
    for (auto _ : state) benchmark::DoNotOptimize(sweep(s).checked);
}
BENCHMARK(BM_SweepConjectureOne)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);

} // namespace
