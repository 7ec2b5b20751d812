#include "qlucas/modarith.hpp"

#include <array>
#include <string>

namespace qlucas {

namespace {

u64 mulmod(u64 a, u64 b, u64 m) noexcept
{
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 b, u64 e, u64 m) noexcept
{
    u64 r = 1 % m;
    b %= m;
    while (e != 0) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(u64 n) noexcept
{
    // These twelve bases are a proven witness set for all n < 3.3 * 10^24.
    static constexpr std::array<u64, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2) return false;
    for (u64 q : bases) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : bases) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(u64 p) : p_(p), odd_(0), two_adic_(0), nonres_(0)
{
    if (p < 3 || p >= max_modulus || !is_prime(p))
        throw InvalidModulus("modulus " + std::to_string(p) + " is not an odd prime below 2^62");
    odd_ = p - 1;
    while ((odd_ & 1) == 0) {
        odd_ >>= 1;
        ++two_adic_;
    }
    for (u64 a = 2;; ++a) {
        if (!is_prime(a)) continue;
        if (legendre(a % p_) == -1) {
            nonres_ = a % p_;
            break;
        }
    }
}

u64 PrimeField::reduce(i64 a) const noexcept
{
    i64 r = a % static_cast<i64>(p_);
    return static_cast<u64>(r < 0 ? r + static_cast<i64>(p_) : r);
}

u64 PrimeField::reduce(i128 a) const noexcept
{
    i128 r = a % static_cast<i128>(p_);
    return static_cast<u64>(r < 0 ? r + static_cast<i128>(p_) : r);
}

u64 PrimeField::pow(u64 base, u64 exp) const noexcept
{
    return powmod(base, exp, p_);
}

u64 PrimeField::inv(u64 a) const
{
    a %= p_;
    if (a == 0) throw ZeroInverse("no inverse of 0 modulo " + std::to_string(p_));
    i64 s = 0, t = 0;
    ext_gcd(static_cast<i64>(a), static_cast<i64>(p_), s, t);
    return reduce(s);
}

int PrimeField::legendre(u64 a) const noexcept
{
    a %= p_;
    if (a == 0) return 0;
    return powmod(a, (p_ - 1) / 2, p_) == 1 ? 1 : -1;
}

std::optional<u64> PrimeField::sqrt(u64 a) const noexcept
{
    a %= p_;
    if (a == 0) return 0;
    if (legendre(a) != 1) return std::nullopt;

    u64 r;
    if (p_ % 4 == 3) {
        r = powmod(a, (p_ + 1) / 4, p_);
    } else {
        unsigned m = two_adic_;
        u64 c = powmod(nonres_, odd_, p_);
        u64 t = powmod(a, odd_, p_);
        r = powmod(a, (odd_ + 1) / 2, p_);
        while (t != 1) {
            unsigned i = 0;
            u64 t2 = t;
            while (t2 != 1) {
                t2 = mulmod(t2, t2, p_);
                ++i;
            }
            u64 b = c;
            for (unsigned j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p_);
            m = i;
            c = mulmod(b, b, p_);
            t = mulmod(t, c, p_);
            r = mulmod(r, b, p_);
        }
    }
    return r <= (p_ - 1) / 2 ? r : p_ - r;
}

} // namespace qlucas
