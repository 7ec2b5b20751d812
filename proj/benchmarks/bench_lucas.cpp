#include <benchmark/benchmark.h>

#include "qlucas/lucas.hpp"
#include "qlucas/quartic.hpp"
#include "qlucas/represent.hpp"

using namespace qlucas;

namespace {

void BM_LucasMod(benchmark::State& state)
{
    const PrimeField f(static_cast<u64>(state.range(0)));
    i64 b = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(lucas_uv_mod({b, -1}, (f.modulus() - 1) / 4, f));
        b += 2;
    }
}
BENCHMARK(BM_LucasMod)->Arg(19997)->Arg(1000000009)->Arg((int64_t{1} << 62) - 57);

void BM_LucasExact64(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(lucas_uv_exact({59, -1}, 64));
}
BENCHMARK(BM_LucasExact64);

void BM_Cornacchia(benchmark::State& state)
{
    const PrimeField f(19997);
    for (auto _ : state) benchmark::DoNotOptimize(cornacchia(f, 53));
}
BENCHMARK(BM_Cornacchia);

void BM_ExtractEta(benchmark::State& state)
{
    u64 p = 19997;
    while (!gated_representation(1, PrimeField(p)).rep)
        do p += 4; while (!is_prime(p));
    const PrimeField f(p);
    const NormalizedRep rep = *gated_representation(1, f).rep;
    for (auto _ : state) benchmark::DoNotOptimize(extract_eta(1, rep, f));
}
BENCHMARK(BM_ExtractEta);

} // namespace
