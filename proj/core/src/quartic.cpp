#include "qlucas/quartic.hpp"

#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace qlucas {

namespace {

u64 nonzero(const PrimeField& f, i64 n, const char* what)
{
    u64 r = f.reduce(n);
    if (r == 0) throw ZeroDenominator(std::string(what) + " vanishes mod " + std::to_string(f.modulus()));
    return r;
}

u64 as_residue(const PrimeField& f, int sign) noexcept
{
    return sign < 0 ? f.modulus() - 1 : 1;
}

std::optional<std::pair<i64, i64>> find_representation(const GeneralForm& f, u64 p)
{
    const i128 D = -static_cast<i128>(f.disc());
    const i128 four_ap = static_cast<i128>(4) * f.a * static_cast<i128>(p);
    const i64 y_max = static_cast<i64>(isqrt(static_cast<u64>(four_ap / D))) + 1;
    for (i64 k = 0; k <= 2 * y_max; ++k) {
        const i64 y = (k & 1) ? (k + 1) / 2 : -(k / 2);
        const i128 rad = four_ap - D * y * y;
        if (rad < 0) continue;
        const u64 sq = isqrt(static_cast<u64>(rad));
        if (static_cast<i128>(sq) * sq != rad) continue;
        for (int sgn : {1, -1}) {
            const i128 num = -static_cast<i128>(f.b) * y + sgn * static_cast<i128>(sq);
            if (num % (2 * f.a) != 0) continue;
            const i64 x = static_cast<i64>(num / (2 * f.a));
            if (f.eval(x, y) == static_cast<i128>(p)) return std::pair{x, y};
        }
    }
    return std::nullopt;
}

} // namespace

Embedding make_embedding(i64 x, i64 y, i64 u, i64 v, const PrimeField& field)
{
    const u64 xr = field.reduce(x);
    const u64 yr = nonzero(field, y, "y");
    const u64 ur = nonzero(field, u, "u");
    const u64 vr = nonzero(field, v, "v");
    Embedding e;
    e.t = field.div(ur, vr);
    e.s = field.div(field.mul(xr, vr), field.mul(yr, ur));
    return e;
}

Embedding make_embedding(const Representation& rep, const PrimeField& field)
{
    return make_embedding(rep.x, rep.y, rep.u, rep.v, field);
}

QuadElement fundamental_unit(i64 b)
{
    if (b == 0) throw GateRejected("b = 0 has no unit");
    if (is_odd(b)) return {b, 1, 2};
    return {b / 2, 1, 1};
}

u64 embed(const QuadElement& e, const Embedding& emb, const PrimeField& field, bool conjugate)
{
    u64 surd = field.mul(field.reduce(e.surd), emb.s);
    if (conjugate) surd = field.neg(surd);
    u64 num = field.add(field.reduce(e.rational), surd);
    return field.div(num, field.reduce(e.denom));
}

EtaPair extract_eta(const QuadElement& e, const Embedding& emb, const PrimeField& field)
{
    const u64 p = field.modulus();
    if (p % 4 != 1) throw GateRejected("p is not 1 mod 4");
    const u64 n = (p - 1) / 4;
    const std::array<u64, 4> roots{1, emb.t, p - 1, p - emb.t};
    auto match = [&](u64 value) {
        for (int k = 0; k < 4; ++k)
            if (roots[static_cast<std::size_t>(k)] == value) return Mu4{k};
        throw NotQuarticUnit("value " + std::to_string(value) + " is not a fourth root of unity mod "
                             + std::to_string(p));
    };
    EtaPair out;
    out.eta = match(field.pow(embed(e, emb, field, false), n));
    out.eta_bar = match(field.pow(embed(e, emb, field, true), n));
    return out;
}

EtaPair extract_eta(i64 b, const NormalizedRep& rep, const PrimeField& field)
{
    const GateDecision gate = representable(b, field);
    if (!gate.qualifies || gate.d != rep.d || rep.p != field.modulus() || !rep.holds())
        throw GateRejected("(b, p) = (" + std::to_string(b) + ", " + std::to_string(field.modulus())
                           + ") does not qualify");
    return extract_eta(fundamental_unit(b), make_embedding(rep, field), field);
}

EtaPair extract_eta(i64 b, const NormalizedRep& rep)
{
    return extract_eta(b, rep, PrimeField(rep.p));
}

int lemma31_branch(Mu4 eta, Mu4 eta_bar) noexcept
{
    return (eta.is_real() ? 0 : 2) + (eta_bar.is_real() ? 0 : 1);
}

SurdResidue lemma31_reconstruct(Mu4 eta, Mu4 eta_bar, i64 X, i64 Y, i64 U, i64 V, const PrimeField& f)
{
    const u64 xr = nonzero(f, X, "X");
    const u64 yr = nonzero(f, Y, "Y");
    const u64 ur = nonzero(f, U, "U");
    const u64 vr = nonzero(f, V, "V");

    const u64 y_over_x = f.div(yr, xr);
    const u64 v_over_u = f.div(vr, ur);
    const u64 yv_over_xu = f.mul(y_over_x, v_over_u);
    const u64 alpha = as_residue(f, eta.alpha());
    const u64 beta = as_residue(f, eta_bar.alpha());
    const u64 half = f.half();

    u64 a2 = 0, b2 = 0; // 2A, 2B
    switch (lemma31_branch(eta, eta_bar)) {
    case 0: // eta = alpha, eta_bar = beta
        a2 = f.add(alpha, beta);
        b2 = f.sub(f.mul(yv_over_xu, beta), f.mul(yv_over_xu, alpha));
        break;
    case 1: // eta = alpha, eta_bar = beta i
        a2 = f.sub(alpha, f.mul(v_over_u, beta));
        b2 = f.sub(f.mul(y_over_x, beta), f.mul(yv_over_xu, alpha));
        break;
    case 2: // eta = alpha i, eta_bar = beta
        a2 = f.sub(beta, f.mul(v_over_u, alpha));
        b2 = f.sub(f.mul(yv_over_xu, beta), f.mul(y_over_x, alpha));
        break;
    default: // eta = alpha i, eta_bar = beta i
        a2 = f.neg(f.add(f.mul(v_over_u, alpha), f.mul(v_over_u, beta)));
        b2 = f.sub(f.mul(y_over_x, beta), f.mul(y_over_x, alpha));
        break;
    }
    return {f.mul(a2, half), f.mul(b2, half)};
}

void GeneralForm::validate() const
{
    if (a <= 0) throw std::invalid_argument("form must have a > 0");
    if (disc() >= 0) throw std::invalid_argument("form must be positive definite");
    i64 s = 0, t = 0;
    i64 g = ext_gcd(ext_gcd(a, b, s, t), c, s, t);
    if (g != 1) throw std::invalid_argument("form must be primitive");
}

bool form_represents_1_or_5_2adically(const GeneralForm& f)
{
    for (i64 x = 0; x < 64; ++x)
        for (i64 y = 0; y < 64; ++y) {
            if (!is_odd(x) && !is_odd(y)) continue;
            const i64 r = static_cast<i64>(f.eval(x, y) % 64);
            const i64 r8 = mod_floor(r, 8);
            if (r8 == 1 || r8 == 5) return true;
        }
    return false;
}

bool is_sum_of_two_squares(u64 n) noexcept
{
    if (n == 0) return true;
    while (n % 2 == 0) n /= 2;
    for (u64 q = 3; q * q <= n; q += 2) {
        unsigned e = 0;
        while (n % q == 0) {
            n /= q;
            ++e;
        }
        if (q % 4 == 3 && (e & 1)) return false;
    }
    return n % 4 != 3;
}

std::optional<std::array<i64, 2>> decompose_two_squares(u64 n)
{
    for (u64 u = isqrt(n);; --u) {
        const u64 rest = n - u * u;
        if (rest > u * u) break;
        if (is_square(rest)) return std::array<i64, 2>{static_cast<i64>(u), static_cast<i64>(isqrt(rest))};
        if (u == 0) break;
    }
    return std::nullopt;
}

IsotropicWitness find_isotropic_witness(const GeneralForm& f, i64 bound)
{
    f.validate();
    for (i64 r = 1; r <= bound; ++r) {
        std::vector<std::pair<i64, i64>> ring;
        if (r == 1) ring.emplace_back(0, 1);
        for (i64 y = -r; y <= r; ++y) ring.emplace_back(r, y);
        for (i64 x = 1; x < r; ++x) {
            ring.emplace_back(x, r);
            ring.emplace_back(x, -r);
        }
        std::optional<std::tuple<i128, i64, i64>> best;
        for (auto [x, y] : ring) {
            i64 s = 0, t = 0;
            if (ext_gcd(x, y, s, t) != 1) continue;
            const i128 value = f.eval(x, y);
            if (value > static_cast<i128>(PrimeField::max_modulus)) continue;
            if (!is_sum_of_two_squares(static_cast<u64>(value))) continue;
            auto cand = std::tuple{value, x, y};
            if (!best || cand < *best) best = cand;
        }
        if (best) {
            auto [value, x, y] = *best;
            auto uv = *decompose_two_squares(static_cast<u64>(value));
            return {x, y, uv[0], uv[1], static_cast<i64>(value)};
        }
    }
    throw SearchExhausted("no isotropic witness with coordinates up to " + std::to_string(bound));
}

bool Section3Data::identity_holds(i64 d, u64 p) const noexcept
{
    const i128 lhs = static_cast<i128>(scale) * scale * a_prime * static_cast<i128>(p);
    const i128 form = static_cast<i128>(X) * X + static_cast<i128>(d) * Y * Y;
    const i128 sums = static_cast<i128>(U) * U + static_cast<i128>(V) * V;
    return lhs == form && lhs == sums;
}

Section3Data section3_pipeline(const GeneralForm& f, const PrimeField& field, i64 d, const Section3Options& options)
{
    f.validate();
    const u64 p = field.modulus();
    if (d <= 1) throw PipelinePreconditionFailed("d must exceed 1");
    const i64 disc = f.disc();
    if (disc != -d && disc != -4 * d)
        throw PipelinePreconditionFailed("discriminant " + std::to_string(disc) + " is neither -d nor -4d");
    if (p % 4 != 1) throw PipelinePreconditionFailed("(-1/p) != 1");
    if (field.legendre(field.reduce(d)) != 1) throw PipelinePreconditionFailed("(d/p) != 1");

    Section3Data out;
    if (f == GeneralForm{1, 0, d}) {
        auto xy = cornacchia(field, d);
        if (!xy) throw NotRepresented(std::to_string(p) + " is not represented by x^2 + " + std::to_string(d) + "y^2");
        const TwoSquares uv = two_squares(field);
        const NormalizedRep rep = normalize({p, d, xy->x, xy->y, uv.u, uv.v});
        out.a_prime = 1;
        out.g = f;
        out.x = out.xp = out.X = rep.x;
        out.y = out.yp = out.Y = rep.y;
        out.u = out.U = rep.u;
        out.v = out.V = rep.v;
        out.witness = {1, 0, 1, 0, 1};
        out.principal_shortcut = true;
        return out;
    }

    auto xy = find_representation(f, p);
    if (!xy)
        throw NotRepresented(std::to_string(p) + " is not represented by (" + std::to_string(f.a) + ", "
                             + std::to_string(f.b) + ", " + std::to_string(f.c) + ")");
    out.x = xy->first;
    out.y = xy->second;

    out.witness = find_isotropic_witness(f, options.witness_bound);
    const IsotropicWitness& w = out.witness;
    out.a_prime = w.a_prime;
    {
        i64 s = 0, t = 0;
        const i64 g = ext_gcd(static_cast<i64>(p % static_cast<u64>(2 * w.a_prime * d)), 2 * w.a_prime * d, s, t);
        if (g != 1) throw PipelinePreconditionFailed("gcd(p, 2a'd) != 1 with a' = " + std::to_string(w.a_prime));
    }

    // Complete (x1, y1) to [[x1, r], [y1, s]] of determinant 1.
    i64 g1 = 0, g2 = 0;
    ext_gcd(w.x1, w.y1, g1, g2);
    i64 r = -g2, s = g1;
    auto middle = [&](i64 rr, i64 ss) {
        return 2 * f.a * w.x1 * rr + f.b * (w.x1 * ss + rr * w.y1) + 2 * f.c * w.y1 * ss;
    };
    const i64 b0 = middle(r, s);
    const i64 step = 2 * w.a_prime;
    // b'(k) = b0 + k * step; pick k minimizing |b'|, preferring b' >= 0.
    i64 k = -b0 / step;
    i64 best_k = k;
    i64 best_b = b0 + k * step;
    for (i64 kk = k - 1; kk <= k + 1; ++kk) {
        const i64 bb = b0 + kk * step;
        if (abs64(bb) < abs64(best_b) || (abs64(bb) == abs64(best_b) && bb > best_b)) {
            best_b = bb;
            best_k = kk;
        }
    }
    r += best_k * w.x1;
    s += best_k * w.y1;
    out.transform = {{{w.x1, r}, {w.y1, s}}};
    out.g = GeneralForm{w.a_prime, best_b, static_cast<i64>(f.eval(r, s))};

    out.xp = s * out.x - r * out.y;
    out.yp = -w.y1 * out.x + w.x1 * out.y;

    const TwoSquares uv = two_squares(field);
    out.u = uv.u;
    out.v = uv.v;

    const i64 a1 = out.g.a;
    const i64 b1 = out.g.b;
    if (disc == -4 * d) {
        out.X = a1 * out.xp + (b1 / 2) * out.yp;
        out.Y = out.yp;
    } else if (!is_odd(out.yp)) {
        out.X = a1 * out.xp + b1 * (out.yp / 2);
        out.Y = out.yp / 2;
    } else {
        out.scale = 2;
        out.X = 2 * a1 * out.xp + b1 * out.yp;
        out.Y = out.yp;
    }
    out.U = out.scale * (w.u1 * out.u - w.v1 * out.v);
    out.V = out.scale * (w.u1 * out.v + w.v1 * out.u);

    if (!out.identity_holds(d, p)) throw std::logic_error("pipeline identity failed");
    return out;
}

} // namespace qlucas
