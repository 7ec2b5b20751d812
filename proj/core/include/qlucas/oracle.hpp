#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qlucas/modarith.hpp"
#include "qlucas/represent.hpp"

namespace qlucas {

// i^k, k in {0, 1, 2, 3}.
struct Mu4 {
    int k = 0;

    static Mu4 from(int sign, bool imaginary) noexcept
    {
        return Mu4{(imaginary ? 1 : 0) + (sign < 0 ? 2 : 0)};
    }

    bool is_real() const noexcept { return (k & 1) == 0; }
    // The alpha in eta = alpha or eta = alpha * i.
    int alpha() const noexcept { return k < 2 ? 1 : -1; }
    Mu4 inverse() const noexcept { return Mu4{(4 - k) & 3}; }
    Mu4 operator*(Mu4 o) const noexcept { return Mu4{(k + o.k) & 3}; }

    std::string to_string() const;

    friend bool operator==(const Mu4&, const Mu4&) = default;
};

// t^k mod p for a fixed square root t of -1.
u64 realize(Mu4 eta, u64 t, const PrimeField& field) noexcept;

/*
 * Which of the four congruences applies: b odd -> 1, b == 4 (mod 8) -> 2,
 * 8 | b -> 3, b == 2 (mod 4) -> 4. Throws GateRejected for b = 0.
 */
int conjecture_for(i64 b);

struct Prediction {
    u64 u_pred = 0;
    u64 v_pred = 0;
    std::string case_label;
    int conjecture = 0;
};

enum class Family { I = 1, II = 2, III = 3 };

// One of the 21 + 16 + 12 = 49 verification classes.
struct CaseId {
    Family family = Family::I;
    int b_class = 1;
    char subcase = 'a';

    std::string to_string() const;

    friend auto operator<=>(const CaseId&, const CaseId&) = default;
};

// All 49 valid case ids in (family, class, subcase) order.
const std::vector<CaseId>& all_case_ids();

bool is_valid_case(const CaseId& id) noexcept;

/*
 * Predicted (U_{(p-1)/4}(b,-1), V_{(p-1)/4}(b,-1)) mod p from the branch tables.
 * rep must be normalized and (b, rep.p) must pass the gate, otherwise
 * GateRejected. Throws UnreachableBranch on parity patterns the theory rules
 * out (e.g. odd y with d == 2 mod 8).
 */
Prediction predict(i64 b, const NormalizedRep& rep, const PrimeField& field);
Prediction predict(i64 b, const NormalizedRep& rep);

// The fourth root of unity eta that the tables assign to (b, rep).
Mu4 predict_eta(i64 b, const NormalizedRep& rep, const PrimeField& field);
Mu4 predict_eta(i64 b, const NormalizedRep& rep);

// Translate eta into (U, V) mod p through the unit-to-residue dictionary.
Prediction eta_to_uv(Mu4 eta, const NormalizedRep& rep, i64 b, const PrimeField& field);

CaseId classify(i64 b, const NormalizedRep& rep);

} // namespace qlucas
