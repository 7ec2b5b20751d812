#pragma once

#include <array>
#include <optional>

#include "qlucas/modarith.hpp"
#include "qlucas/oracle.hpp"
#include "qlucas/represent.hpp"

namespace qlucas {

/*
 * Residue-level image of the prime above p containing x - y*sqrt(d)*i and
 * u - v*i. That choice pins
 *
 *     t = u / v          (t^2 = -1),
 *     s = x v / (y u)    (s^2 = d),
 *
 * so that x == y s t and u == v t (mod p). No other root choice is exposed.
 */
struct Embedding {
    u64 t = 0;
    u64 s = 0;
};

// Works for any (X, Y, U, V) with X^2 + d Y^2 == U^2 + V^2 == 0 (mod p).
// Throws ZeroDenominator if Y, U or V vanishes mod p.
Embedding make_embedding(i64 x, i64 y, i64 u, i64 v, const PrimeField& field);
Embedding make_embedding(const Representation& rep, const PrimeField& field);

// (rational + surd * sqrt(d)) / denom with denom in {1, 2}.
struct QuadElement {
    i64 rational = 0;
    i64 surd = 0;
    i64 denom = 1;
};

// (b + sqrt(d))/2 for odd b, b/2 + sqrt(d) for even b. Both have norm -1.
QuadElement fundamental_unit(i64 b);

// Image of the element under sqrt(d) -> +s (conjugate: -s).
u64 embed(const QuadElement& e, const Embedding& emb, const PrimeField& field, bool conjugate = false);

struct EtaPair {
    Mu4 eta;     // e^{(p-1)/4} = t^eta.k
    Mu4 eta_bar; // same for the conjugate
};

// Throws NotQuarticUnit if either power is not a fourth root of unity, which
// can only happen when the element vanishes mod the chosen prime.
EtaPair extract_eta(const QuadElement& e, const Embedding& emb, const PrimeField& field);
EtaPair extract_eta(i64 b, const NormalizedRep& rep, const PrimeField& field);
EtaPair extract_eta(i64 b, const NormalizedRep& rep);

// eps^{(p-1)/4} == A + B sqrt(d) (mod p).
struct SurdResidue {
    u64 a = 0;
    u64 b = 0;

    friend bool operator==(const SurdResidue&, const SurdResidue&) = default;
};

/*
 * Recover A, B from (eta, eta_bar) using only Y/X, V/U and YV/(XU). Dispatches
 * on which of eta, eta_bar are real. Throws ZeroDenominator if any of X, Y,
 * U, V is 0 mod p.
 */
SurdResidue lemma31_reconstruct(Mu4 eta, Mu4 eta_bar, i64 X, i64 Y, i64 U, i64 V,
                                const PrimeField& field);

// Which of the four (eta real?, eta_bar real?) branches applies: 0..3 for
// (real, real), (real, imag), (imag, real), (imag, imag).
int lemma31_branch(Mu4 eta, Mu4 eta_bar) noexcept;

// Primitive positive definite a x^2 + b xy + c y^2.
struct GeneralForm {
    i64 a = 1;
    i64 b = 0;
    i64 c = 1;

    i64 disc() const noexcept { return b * b - 4 * a * c; }
    i128 eval(i64 x, i64 y) const noexcept
    {
        return static_cast<i128>(a) * x * x + static_cast<i128>(b) * x * y + static_cast<i128>(c) * y * y;
    }
    // Throws std::invalid_argument unless primitive with a > 0 and disc < 0.
    void validate() const;

    friend bool operator==(const GeneralForm&, const GeneralForm&) = default;
};

// Exhaustive search of f(x, y) mod 64 over (x, y) not both even, accepting a
// value == 1 or 5 (mod 8).
bool form_represents_1_or_5_2adically(const GeneralForm& f);

// Trial-division test: no prime == 3 (mod 4) to an odd power.
bool is_sum_of_two_squares(u64 n) noexcept;

// n = u^2 + v^2 with u >= v >= 0 and u as large as possible.
std::optional<std::array<i64, 2>> decompose_two_squares(u64 n);

struct IsotropicWitness {
    i64 x1 = 0, y1 = 0, u1 = 0, v1 = 0;
    i64 a_prime = 0;
};

inline constexpr i64 default_witness_bound = 1000;

/*
 * Smallest coprime (x1, y1), ordered by max(|x1|, |y1|) and then by f value,
 * with f(x1, y1) = u1^2 + v1^2. (x1, y1) is taken up to overall sign with
 * x1 > 0, or x1 = 0 and y1 = 1. Throws SearchExhausted past bound.
 */
IsotropicWitness find_isotropic_witness(const GeneralForm& f, i64 bound = default_witness_bound);

struct Section3Options {
    i64 witness_bound = default_witness_bound;
};

/*
 * scale^2 * a' * p = X^2 + d Y^2 = U^2 + V^2. scale is 1 except for odd
 * discriminant -d with y' odd, where X and Y would be half-integers; then all
 * four are doubled.
 */
struct Section3Data {
    i64 a_prime = 0;
    // (x, y)^T = transform * (x', y')^T, determinant 1, first column (x1, y1).
    std::array<std::array<i64, 2>, 2> transform{{{1, 0}, {0, 1}}};
    GeneralForm g;      // f after the change of variables; g.a == a'
    i64 x = 0, y = 0;   // f(x, y) = p
    i64 xp = 0, yp = 0; // (x', y')
    i64 u = 0, v = 0;   // p = u^2 + v^2
    IsotropicWitness witness;
    i64 X = 0, Y = 0, U = 0, V = 0;
    i64 scale = 1;
    bool principal_shortcut = false;

    bool identity_holds(i64 d, u64 p) const noexcept;
};

Section3Data section3_pipeline(const GeneralForm& f, const PrimeField& field, i64 d,
                               const Section3Options& options = {});

} // namespace qlucas
