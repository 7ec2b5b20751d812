#include "qlucas/sieve.hpp"

#include <algorithm>

namespace qlucas {

namespace {

constexpr u64 segment_size = u64{1} << 15;

std::vector<u64> small_primes(u64 limit)
{
    std::vector<bool> composite(limit + 1, false);
    std::vector<u64> out;
    for (u64 i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

} // namespace

std::vector<u64> primes_up_to(u64 limit)
{
    std::vector<u64> out;
    if (limit < 2) return out;
    const u64 root = isqrt(limit);
    const std::vector<u64> base = small_primes(root);
    out.push_back(2);

    // Only odd numbers are stored: index i stands for lo + 2i.
    std::vector<char> mark(segment_size);
    for (u64 lo = 3; lo <= limit; lo += 2 * segment_size) {
        const u64 hi = std::min(limit, lo + 2 * segment_size - 1);
        const u64 count = (hi - lo) / 2 + 1;
        std::fill(mark.begin(), mark.begin() + static_cast<std::ptrdiff_t>(count), 1);
        for (u64 q : base) {
            if (q == 2) continue;
            if (q * q > hi) break;
            u64 start = std::max(q * q, (lo + q - 1) / q * q);
            if (start % 2 == 0) start += q;
            for (u64 m = start; m <= hi; m += 2 * q) mark[(m - lo) / 2] = 0;
        }
        for (u64 i = 0; i < count; ++i)
            if (mark[i]) out.push_back(lo + 2 * i);
    }
    return out;
}

std::vector<u64> primes_one_mod_four(u64 limit)
{
    std::vector<u64> all = primes_up_to(limit);
    std::vector<u64> out;
    out.reserve(all.size() / 2 + 1);
    for (u64 p : all)
        if (p % 4 == 1) out.push_back(p);
    return out;
}

} // namespace qlucas
