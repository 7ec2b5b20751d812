#pragma once

#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "qlucas/modarith.hpp"

namespace qlucas {

using BigInt = boost::multiprecision::cpp_int;

// Parameters of U_n(b, c), V_n(b, c): s_{n+1} = b s_n - c s_{n-1}.
struct LucasParams {
    i64 b = 1;
    i64 c = -1;

    i128 discriminant() const noexcept
    {
        return static_cast<i128>(b) * b - static_cast<i128>(4) * c;
    }
};

// (U_n mod p, V_n mod p). Satisfies v^2 - D u^2 == 4 c^n (mod p).
struct LucasPair {
    u64 u = 0;
    u64 v = 0;

    friend bool operator==(const LucasPair&, const LucasPair&) = default;
};

// O(log n) fast doubling.
LucasPair lucas_uv_mod(const LucasParams& params, u64 n, const PrimeField& field);

inline constexpr unsigned lucas_exact_max_index = 64;

// Exact (U_n, V_n) by the linear recurrence. Throws IndexTooLarge for
// n > lucas_exact_max_index.
std::pair<BigInt, BigInt> lucas_uv_exact(const LucasParams& params, unsigned n);

} // namespace qlucas
