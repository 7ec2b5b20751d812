#include "qlucas/represent.hpp"

#include <string>

namespace qlucas {

namespace {

// Euclidean descent from a square root r of -d: stop at the first remainder
// below sqrt(p), then test whether (p - x^2)/d is a square.
std::optional<FormSolution> descend(u64 p, i64 d, u64 r)
{
    u64 a = p;
    u64 b = r;
    while (static_cast<u128>(b) * b > p) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    u64 rest = p - b * b;
    if (rest % static_cast<u64>(d) != 0) return std::nullopt;
    u64 q = rest / static_cast<u64>(d);
    if (!is_square(q)) return std::nullopt;
    return FormSolution{static_cast<i64>(b), static_cast<i64>(isqrt(q))};
}

i64 fix_odd_part(i64 n)
{
    if (n == 0) return 0;
    return mod_floor(odd_part(n), 4) == 1 ? n : -n;
}

} // namespace

bool Representation::holds() const noexcept
{
    const i128 P = static_cast<i128>(p);
    const i128 lhs1 = static_cast<i128>(x) * x + static_cast<i128>(d) * y * y;
    const i128 lhs2 = static_cast<i128>(u) * u + static_cast<i128>(v) * v;
    return lhs1 == P && lhs2 == P;
}

std::string_view to_string(ParityClass c) noexcept
{
    switch (c) {
    case ParityClass::x_single_even: return "2||x";
    case ParityClass::y_single_even: return "2||y";
    case ParityClass::x_div4: return "4|x";
    case ParityClass::y_div4: return "4|y";
    }
    return "?";
}

TwoSquares two_squares(const PrimeField& field)
{
    const u64 p = field.modulus();
    if (p % 4 != 1) throw NotOneModFour(std::to_string(p) + " is not 1 mod 4");
    const u64 r = *field.sqrt(p - 1);
    auto sol = descend(p, 1, r);
    if (!sol) sol = descend(p, 1, p - r);
    // Fermat's theorem guarantees a solution; the descent always finds it.
    i64 a = sol->x, b = sol->y;
    if (is_odd(a)) return {a, b};
    return {b, a};
}

std::optional<FormSolution> represent_by_search(u64 p, i64 d)
{
    if (d <= 0) return std::nullopt;
    for (u64 y = 1; static_cast<u128>(d) * y * y <= p; ++y) {
        u64 rest = p - static_cast<u64>(d) * y * y;
        if (is_square(rest)) return FormSolution{static_cast<i64>(isqrt(rest)), static_cast<i64>(y)};
    }
    return std::nullopt;
}

std::optional<FormSolution> cornacchia(const PrimeField& field, i64 d)
{
    const u64 p = field.modulus();
    if (d < 1) return std::nullopt;
    if (static_cast<u64>(d) >= p) return represent_by_search(p, d);
    if (static_cast<u64>(d) % p == 0) return std::nullopt;
    auto r = field.sqrt(field.neg(field.reduce(d)));
    if (!r) return std::nullopt;
    if (auto sol = descend(p, d, *r)) return sol;
    return descend(p, d, p - *r);
}

NormalizedRep normalize(const Representation& rep)
{
    NormalizedRep out;
    out.p = rep.p;
    out.d = rep.d;
    // u first, then v, x, y; each constraint touches one variable only.
    out.u = mod_floor(rep.u, 4) == 1 ? rep.u : -rep.u;
    out.v = fix_odd_part(rep.v);
    out.x = fix_odd_part(rep.x);
    out.y = fix_odd_part(rep.y);
    out.v2x = out.x == 0 ? 0 : v2(out.x);
    out.v2y = out.y == 0 ? 0 : v2(out.y);
    out.v2v = out.v == 0 ? 0 : v2(out.v);
    if (out.v2x == 1)
        out.parity = ParityClass::x_single_even;
    else if (out.v2x >= 2)
        out.parity = ParityClass::x_div4;
    else if (out.v2y == 1)
        out.parity = ParityClass::y_single_even;
    else
        out.parity = ParityClass::y_div4;
    return out;
}

std::string_view describe(GateFailure f, i64 b) noexcept
{
    const bool odd = is_odd(b);
    switch (f) {
    case GateFailure::none: return "qualifies";
    case GateFailure::b_zero: return "b = 0";
    case GateFailure::not_one_mod_four: return "p is not 1 mod 4";
    case GateFailure::equals_d: return odd ? "p = b²+4" : "p = b²/4+1";
    case GateFailure::divides_d: return "p divides d";
    case GateFailure::d_nonresidue: return "(d/p) = -1";
    case GateFailure::not_represented: return "p is not of the form x²+dy²";
    }
    return "?";
}

i64 discriminant_d(i64 b)
{
    if (b == 0) throw GateRejected("b = 0 has no associated d");
    if (is_odd(b)) return b * b + 4;
    return (b / 2) * (b / 2) + 1;
}

GateDecision representable(i64 b, const PrimeField& field)
{
    GateDecision g;
    if (b == 0) {
        g.failure = GateFailure::b_zero;
        return g;
    }
    g.d = discriminant_d(b);
    const u64 p = field.modulus();
    if (p % 4 != 1) {
        g.failure = GateFailure::not_one_mod_four;
    } else if (static_cast<u64>(g.d) == p) {
        g.failure = GateFailure::equals_d;
    } else if (static_cast<u64>(g.d) % p == 0) {
        g.failure = GateFailure::divides_d;
    } else if (field.legendre(field.reduce(g.d)) != 1) {
        g.failure = GateFailure::d_nonresidue;
    } else {
        g.qualifies = true;
    }
    return g;
}

GatedRep gated_representation(i64 b, const PrimeField& field)
{
    GatedRep out;
    out.gate = representable(b, field);
    if (!out.gate.qualifies) return out;
    auto xy = cornacchia(field, out.gate.d);
    if (!xy) {
        out.gate.qualifies = false;
        out.gate.failure = GateFailure::not_represented;
        return out;
    }
    const TwoSquares uv = two_squares(field);
    Representation rep{field.modulus(), out.gate.d, xy->x, xy->y, uv.u, uv.v};
    out.rep = normalize(rep);
    return out;
}

} // namespace qlucas
