#pragma once

#include <optional>
#include <string_view>

#include "qlucas/modarith.hpp"

namespace qlucas {

// p = x^2 + d y^2 = u^2 + v^2, checked in exact arithmetic.
struct Representation {
    u64 p = 0;
    i64 d = 0;
    i64 x = 0, y = 0, u = 0, v = 0;

    bool holds() const noexcept;
};

// Which of 2||x, 2||y, 4|x, 4|y holds.
enum class ParityClass { x_single_even, y_single_even, x_div4, y_div4 };

std::string_view to_string(ParityClass c) noexcept;

/*
 * A representation whose signs are fixed so that u == 1 (mod 4) and the odd
 * parts of x, y and v are all == 1 (mod 4).
 */
struct NormalizedRep : Representation {
    int v2x = 0, v2y = 0, v2v = 0;
    ParityClass parity = ParityClass::x_single_even;
};

struct TwoSquares {
    i64 u = 0; // odd
    i64 v = 0; // even
};

// p = u^2 + v^2 with u odd, v even, both positive. Throws NotOneModFour.
TwoSquares two_squares(const PrimeField& field);

struct FormSolution {
    i64 x = 0;
    i64 y = 0;
};

// Cornacchia: positive (x, y) with x^2 + d y^2 = p, or nothing when p is not
// represented. Requires d >= 1 and p not dividing d.
std::optional<FormSolution> cornacchia(const PrimeField& field, i64 d);

// Exhaustive search used when d >= p, where the Euclidean descent degenerates.
std::optional<FormSolution> represent_by_search(u64 p, i64 d);

// Sign normalization; idempotent and preserves absolute values.
NormalizedRep normalize(const Representation& rep);

// Why a (b, p) pair falls outside the hypotheses of the four congruences.
enum class GateFailure {
    none,
    b_zero,
    not_one_mod_four,
    equals_d,
    divides_d,
    d_nonresidue,
    not_represented,
};

std::string_view describe(GateFailure f, i64 b) noexcept;

// d = b^2 + 4 for odd b, b^2/4 + 1 for even b. Not reduced to its square-free
// kernel. b must be nonzero.
i64 discriminant_d(i64 b);

struct GateDecision {
    bool qualifies = false;
    i64 d = 0;
    GateFailure failure = GateFailure::none;
};

// Checks p == 1 (mod 4), p not dividing d, p != d and (d/p) = 1.
GateDecision representable(i64 b, const PrimeField& field);

struct GatedRep {
    GateDecision gate;
    std::optional<NormalizedRep> rep;
};

// representable + cornacchia + two_squares + normalize. A pair that passes the
// Legendre gate but is not of the form x^2 + d y^2 comes back with
// failure == not_represented and no rep.
GatedRep gated_representation(i64 b, const PrimeField& field);

} // namespace qlucas
