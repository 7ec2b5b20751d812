#include "qlucas/lucas.hpp"

#include <bit>
#include <string>

namespace qlucas {

LucasPair lucas_uv_mod(const LucasParams& params, u64 n, const PrimeField& field)
{
    const u64 b = field.reduce(params.b);
    const u64 c = field.reduce(params.c);
    const u64 disc = field.reduce(params.discriminant());
    const u64 two = field.reduce_u(2);
    const u64 half = field.half();

    // Invariant: (u, v, ck) = (U_k, V_k, c^k) for k = the prefix of n read so far.
    u64 u = 0;
    u64 v = two;
    u64 ck = 1;
    for (int bit = 63 - std::countl_zero(n | 1); bit >= 0; --bit) {
        // k -> 2k
        u = field.mul(u, v);
        v = field.sub(field.mul(v, v), field.mul(two, ck));
        ck = field.mul(ck, ck);
        if ((n >> bit) & 1) {
            // k -> k + 1
            u64 nu = field.mul(field.add(field.mul(b, u), v), half);
            u64 nv = field.mul(field.add(field.mul(disc, u), field.mul(b, v)), half);
            u = nu;
            v = nv;
            ck = field.mul(ck, c);
        }
    }
    return {u, v};
}

std::pair<BigInt, BigInt> lucas_uv_exact(const LucasParams& params, unsigned n)
{
    if (n > lucas_exact_max_index)
        throw IndexTooLarge("exact Lucas index " + std::to_string(n) + " exceeds "
                            + std::to_string(lucas_exact_max_index));
    const BigInt b = params.b;
    const BigInt c = params.c;
    BigInt u0 = 0, u1 = 1;
    BigInt v0 = 2, v1 = b;
    if (n == 0) return {u0, v0};
    for (unsigned k = 1; k < n; ++k) {
        BigInt u2 = b * u1 - c * u0;
        BigInt v2 = b * v1 - c * v0;
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    return {u1, v1};
}

} // namespace qlucas
