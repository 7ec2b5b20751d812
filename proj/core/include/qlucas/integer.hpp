#pragma once

// Small exact-integer helpers shared by the modules. Everything here works on
// signed 64-bit values with 128-bit intermediates.

#include <bit>
#include <cstdint>
#include <cmath>
#include <numeric>

namespace qlucas {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

// Floor square root.
constexpr u64 isqrt(u64 n) noexcept
{
    if (n < 2) return n;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (static_cast<u128>(r) * r > n) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

constexpr bool is_square(u64 n) noexcept
{
    u64 r = isqrt(n);
    return r * r == n;
}

// Non-negative remainder of a modulo m (m > 0).
constexpr i64 mod_floor(i64 a, i64 m) noexcept
{
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

constexpr bool is_odd(i64 n) noexcept { return (n & 1) != 0; }

// (-1)^e for any signed exponent.
constexpr int sign_power(i64 e) noexcept { return is_odd(e) ? -1 : 1; }

// 2-adic valuation; n must be nonzero.
constexpr int v2(i64 n) noexcept
{
    return std::countr_zero(static_cast<u64>(n));
}

// n / 2^v2(n), sign retained.
constexpr i64 odd_part(i64 n) noexcept
{
    return n / (i64{1} << v2(n));
}

constexpr i64 abs64(i64 n) noexcept { return n < 0 ? -n : n; }

// Extended Euclid: returns g = gcd(a, b) >= 0 with a*s + b*t = g.
constexpr i64 ext_gcd(i64 a, i64 b, i64& s, i64& t) noexcept
{
    i64 s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        i64 q = a / b;
        i64 r = a - q * b;
        a = b;
        b = r;
        i64 ns = s0 - q * s1;
        s0 = s1;
        s1 = ns;
        i64 nt = t0 - q * t1;
        t0 = t1;
        t1 = nt;
    }
    if (a < 0) {
        a = -a;
        s0 = -s0;
        t0 = -t0;
    }
    s = s0;
    t = t0;
    return a;
}

} // namespace qlucas
