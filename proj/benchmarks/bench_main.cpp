#include <benchmark/benchmark.h>

// The distro benchmark_main archive is LTO bytecode from a different gcc.
BENCHMARK_MAIN();
