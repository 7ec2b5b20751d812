#pragma once

#include <optional>

#include "qlucas/errors.hpp"
#include "qlucas/integer.hpp"

namespace qlucas {

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n) noexcept;

/*
 * Arithmetic modulo an odd prime p < 2^62. Residues are u64 values in [0, p).
 * Products go through 128-bit intermediates. The object is immutable after
 * construction and can be shared freely between threads.
 */
class PrimeField {
public:
    static constexpr u64 max_modulus = u64{1} << 62;

    // Throws InvalidModulus unless p is an odd prime below 2^62.
    explicit PrimeField(u64 p);

    u64 modulus() const noexcept { return p_; }

    u64 reduce(i64 a) const noexcept;
    u64 reduce(i128 a) const noexcept;
    u64 reduce_u(u64 a) const noexcept { return a % p_; }

    u64 add(u64 a, u64 b) const noexcept
    {
        u64 s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    u64 sub(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    u64 neg(u64 a) const noexcept { return a == 0 ? 0 : p_ - a; }
    u64 mul(u64 a, u64 b) const noexcept
    {
        return static_cast<u64>(static_cast<u128>(a) * b % p_);
    }

    u64 pow(u64 base, u64 exp) const noexcept;

    // Throws ZeroInverse when a == 0 mod p.
    u64 inv(u64 a) const;
    u64 div(u64 a, u64 b) const { return mul(a, inv(b)); }

    // Euler's criterion mapped to {-1, 0, +1}.
    int legendre(u64 a) const noexcept;

    // Tonelli-Shanks. Returns the root in [1, (p-1)/2] for nonzero residues,
    // 0 for a == 0, and nothing for non-residues.
    std::optional<u64> sqrt(u64 a) const noexcept;

    // Smallest prime non-residue, searched 2, 3, 5, 7, ...
    u64 non_residue() const noexcept { return nonres_; }

    u64 half() const noexcept { return (p_ + 1) / 2; }

private:
    u64 p_;
    u64 odd_;          // p - 1 = odd_ * 2^two_adic_
    unsigned two_adic_;
    u64 nonres_;
};

} // namespace qlucas
