#include <gtest/gtest.h>

#include "qlucas/lucas.hpp"
#include "support/oracles.hpp"

using namespace qlucas;

TEST(LucasMod, Examples)
{
    EXPECT_EQ(lucas_uv_mod({1, -1}, 10, PrimeField(41)), (LucasPair{14, 0}));
    EXPECT_EQ(lucas_uv_mod({1, -1}, 0, PrimeField(41)), (LucasPair{0, 2}));
    EXPECT_EQ(lucas_uv_mod({2, -1}, 4, PrimeField(17)), (LucasPair{12, 0}));
}

TEST(LucasExact, Examples)
{
    EXPECT_EQ(lucas_uv_exact({1, -1}, 7), std::pair(BigInt(13), BigInt(29)));
    EXPECT_EQ(lucas_uv_exact({3, -1}, 1), std::pair(BigInt(1), BigInt(3)));
    EXPECT_EQ(lucas_uv_exact({2, -1}, 4), std::pair(BigInt(12), BigInt(34)));
    EXPECT_EQ(lucas_uv_exact({5, 3}, 0), std::pair(BigInt(0), BigInt(2)));
}

TEST(LucasExact, IndexCap)
{
    EXPECT_NO_THROW(lucas_uv_exact({1, -1}, 64));
    EXPECT_THROW(lucas_uv_exact({1, -1}, 65), IndexTooLarge);
}

TEST(LucasExact, Fibonacci64)
{
    // F_64 and L_64.
    auto [u, v] = lucas_uv_exact({1, -1}, 64);
    EXPECT_EQ(u, BigInt("10610209857723"));
    EXPECT_EQ(v, BigInt("23725150497407"));
}

TEST(LucasMod, AgreesWithLinearRecurrence)
{
    for (u64 p : {3ull, 5ull, 7ull, 29ull, 41ull, 97ull, 1009ull}) {
        const PrimeField f(p);
        for (i64 b = -6; b <= 6; ++b)
            for (i64 c = -3; c <= 3; ++c)
                for (u64 n = 0; n < 80; ++n) {
                    auto [u, v] = oracle::lucas_linear(b, c, n, p);
                    ASSERT_EQ(lucas_uv_mod({b, c}, n, f), (LucasPair{u, v})) << b << " " << c << " " << n << " " << p;
                }
    }
}

TEST(LucasMod, AgreesWithExactReduced)
{
    for (u64 p : {5ull, 13ull, 17ull, 101ull, 65537ull}) {
        const PrimeField f(p);
        for (i64 b : {-7, -2, 1, 3, 8})
            for (i64 c : {-1, 2})
                for (unsigned n = 0; n <= lucas_exact_max_index; ++n) {
                    auto [U, V] = lucas_uv_exact({b, c}, n);
                    const BigInt P(p);
                    BigInt ur = ((U % P) + P) % P, vr = ((V % P) + P) % P;
                    ASSERT_EQ(lucas_uv_mod({b, c}, n, f), (LucasPair{ur.convert_to<u64>(), vr.convert_to<u64>()}));
                }
    }
}

TEST(LucasMod, LargeIndexAndModulus)
{
    // U_{p - (D/p)} == 0 (mod p) for p not dividing 2cD.
    const u64 p = 1000000007ull;
    const PrimeField f(p);
    const i64 D = 5; // b = 1, c = -1
    const int leg = f.legendre(D);
    EXPECT_EQ(lucas_uv_mod({1, -1}, p - leg, f).u, 0u);
    // V_p == b (mod p).
    EXPECT_EQ(lucas_uv_mod({7, 3}, p, f).v, 7u);
}

TEST(LucasParams, Discriminant)
{
    EXPECT_EQ(static_cast<i64>(LucasParams{3, -1}.discriminant()), 13);
    EXPECT_EQ(static_cast<i64>(LucasParams{2, 1}.discriminant()), 0);
}
