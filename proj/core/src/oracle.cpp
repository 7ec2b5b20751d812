#include "qlucas/oracle.hpp"

#include <array>
#include <string>

namespace qlucas {

namespace {

bool is_normalized(const NormalizedRep& r) noexcept
{
    auto ok = [](i64 n) { return n != 0 && mod_floor(odd_part(n), 4) == 1; };
    return mod_floor(r.u, 4) == 1 && ok(r.x) && ok(r.y) && ok(r.v);
}

void check_inputs(i64 b, const NormalizedRep& rep, const PrimeField& field)
{
    if (b == 0) throw GateRejected("b = 0");
    if (rep.p != field.modulus())
        throw GateRejected("representation is for a different prime");
    const i64 d = discriminant_d(b);
    if (rep.d != d)
        throw GateRejected("representation uses d = " + std::to_string(rep.d) + ", b = "
                           + std::to_string(b) + " needs d = " + std::to_string(d));
    const GateDecision gate = representable(b, field);
    if (!gate.qualifies)
        throw GateRejected("(b, p) = (" + std::to_string(b) + ", " + std::to_string(rep.p)
                           + ") rejected: " + std::string(describe(gate.failure, b)));
    if (!rep.holds()) throw GateRejected("representation does not satisfy its equations");
    if (!is_normalized(rep)) throw GateRejected("representation is not normalized");
}

i64 exact_quarter(i64 n, const char* what)
{
    if (mod_floor(n, 4) != 0)
        throw UnreachableBranch(std::string(what) + " = " + std::to_string(n) + " is not divisible by 4");
    return n / 4;
}

i64 exact_eighth(i64 n, const char* what)
{
    if (mod_floor(n, 8) != 0)
        throw UnreachableBranch(std::string(what) + " = " + std::to_string(n) + " is not divisible by 8");
    return n / 8;
}

// Residue of sign * num / den.
u64 signed_ratio(const PrimeField& f, int sign, i64 num, i64 den)
{
    u64 r = f.div(f.reduce(num), f.reduce(den));
    return sign < 0 ? f.neg(r) : r;
}

u64 signed_const(const PrimeField& f, int sign, u64 value)
{
    u64 r = f.reduce_u(value);
    return sign < 0 ? f.neg(r) : r;
}

bool b_low_octant(i64 b) noexcept
{
    const i64 r = mod_floor(b, 8);
    return r == 1 || r == 3;
}

// (xy + v)/4 + (b/8) y, reduced to a parity.
int conj3_v_sign(i64 b, const NormalizedRep& r)
{
    const i128 xy = static_cast<i128>(r.x) * r.y;
    const i128 num = xy + r.v;
    if (num % 4 != 0) throw UnreachableBranch("xy + v is not divisible by 4");
    const bool q_odd = ((num / 4) & 1) != 0;
    const bool by_odd = is_odd(exact_eighth(b, "b")) && is_odd(r.y);
    return (q_odd != by_odd) ? -1 : 1;
}

Prediction predict_conj1(i64 b, const NormalizedRep& r, const PrimeField& f)
{
    Prediction out;
    out.conjecture = 1;
    const bool low = b_low_octant(b);
    switch (r.parity) {
    case ParityClass::x_single_even: {
        int s = sign_power(exact_quarter(r.v, "v")) * (low ? 1 : -1);
        out.u_pred = signed_ratio(f, s, 2 * r.y, r.x);
        out.case_label = low ? "C1(i) 2||x, b=1,3 mod 8" : "C1(i) 2||x, b=5,7 mod 8";
        break;
    }
    case ParityClass::y_single_even:
        out.u_pred = f.div(f.mul(f.reduce_u(2), f.mul(f.reduce(r.y), f.reduce(r.v))),
                           f.mul(f.reduce(r.x), f.reduce(r.u)));
        out.case_label = "C1(i) 2||y";
        break;
    case ParityClass::y_div4:
        out.v_pred = signed_const(f, sign_power(exact_quarter(r.y + r.v, "y+v")), 2);
        out.case_label = "C1(ii) 4|y";
        break;
    case ParityClass::x_div4: {
        int s = sign_power(exact_quarter(r.x, "x")) * (low ? -1 : 1);
        out.v_pred = signed_ratio(f, s, 2 * r.v, r.u);
        out.case_label = low ? "C1(ii) 4|x, b=1,3 mod 8" : "C1(ii) 4|x, b=5,7 mod 8";
        break;
    }
    }
    return out;
}

Prediction predict_conj2(i64 b, const NormalizedRep& r, const PrimeField& f)
{
    Prediction out;
    out.conjecture = 2;
    switch (r.parity) {
    case ParityClass::x_single_even: {
        int s = sign_power(exact_eighth(b + 4, "b+4") + exact_quarter(r.v, "v"));
        out.u_pred = signed_ratio(f, s, r.y, r.x);
        out.case_label = "C2 2||x";
        break;
    }
    case ParityClass::y_single_even:
        out.u_pred = f.div(f.mul(f.reduce(r.y), f.reduce(r.v)), f.mul(f.reduce(r.x), f.reduce(r.u)));
        out.case_label = "C2 2||y";
        break;
    case ParityClass::y_div4:
        out.v_pred = signed_const(f, sign_power(exact_quarter(r.y + r.v, "y+v")), 2);
        out.case_label = "C2 4|y";
        break;
    case ParityClass::x_div4: {
        int s = sign_power(exact_eighth(b - 4, "b-4") + exact_quarter(r.x, "x"));
        out.v_pred = signed_ratio(f, s, 2 * r.v, r.u);
        out.case_label = "C2 4|x";
        break;
    }
    }
    return out;
}

Prediction predict_conj3(i64 b, const NormalizedRep& r, const PrimeField& f)
{
    Prediction out;
    out.conjecture = 3;
    const i64 b8 = exact_eighth(b, "b");
    if (r.parity == ParityClass::x_single_even || r.parity == ParityClass::y_single_even) {
        // (b/8 - 1) y only matters as a parity.
        const bool odd_exp = is_odd(b8 - 1) && is_odd(r.y);
        const int s = odd_exp ? 1 : -1;
        u64 ratio = f.div(f.mul(f.reduce(r.y), f.reduce(r.v)), f.mul(f.reduce(r.x), f.reduce(r.u)));
        out.u_pred = s < 0 ? f.neg(ratio) : ratio;
        out.case_label = "C3 4∤xy";
    } else {
        out.v_pred = signed_const(f, conj3_v_sign(b, r), 2);
        out.case_label = "C3 4|xy";
    }
    return out;
}

Prediction predict_conj4(i64 b, const NormalizedRep& r, const PrimeField& f)
{
    Prediction out;
    out.conjecture = 4;
    switch (r.parity) {
    case ParityClass::y_single_even: {
        int s = sign_power(exact_quarter(b + r.v - 2, "b+v-2"));
        out.u_pred = signed_ratio(f, s, r.y, r.x);
        out.case_label = "C4 2||y";
        break;
    }
    case ParityClass::y_div4:
        out.v_pred = signed_const(f, sign_power(exact_quarter(r.y + r.v, "y+v")), 2);
        out.case_label = "C4 4|y";
        break;
    default:
        throw UnreachableBranch("d = 2 mod 8 forces y even and x odd");
    }
    return out;
}

Mu4 eta_conj1(i64 b, const NormalizedRep& r)
{
    const bool low = b_low_octant(b);
    switch (r.parity) {
    case ParityClass::x_single_even:
        return Mu4::from(sign_power(exact_quarter(r.v, "v")) * (low ? -1 : 1), true);
    case ParityClass::y_single_even: return Mu4::from(-1, false);
    case ParityClass::y_div4: return Mu4::from(sign_power(exact_quarter(r.y + r.v, "y+v")), false);
    case ParityClass::x_div4:
        return Mu4::from(sign_power(exact_quarter(r.x, "x")) * (low ? 1 : -1), true);
    }
    throw UnreachableBranch("unknown parity class");
}

Mu4 eta_conj2(i64 b, const NormalizedRep& r)
{
    switch (r.parity) {
    case ParityClass::x_single_even:
        return Mu4::from(-sign_power(exact_eighth(b + 4, "b+4") + exact_quarter(r.v, "v")), true);
    case ParityClass::y_single_even: return Mu4::from(-1, false);
    case ParityClass::y_div4: return Mu4::from(sign_power(exact_quarter(r.y + r.v, "y+v")), false);
    case ParityClass::x_div4:
        return Mu4::from(sign_power(exact_eighth(b + 4, "b+4") + exact_quarter(r.x, "x")), true);
    }
    throw UnreachableBranch("unknown parity class");
}

Mu4 eta_conj3(i64 b, const NormalizedRep& r)
{
    const i64 b8 = exact_eighth(b, "b");
    if (r.parity == ParityClass::x_single_even || r.parity == ParityClass::y_single_even)
        return Mu4::from((is_odd(b8 - 1) && is_odd(r.y)) ? -1 : 1, false);
    return Mu4::from(conj3_v_sign(b, r), false);
}

Mu4 eta_conj4(i64 b, const NormalizedRep& r)
{
    switch (r.parity) {
    case ParityClass::y_single_even:
        return Mu4::from(sign_power(exact_quarter(b + r.v + 2, "b+v+2")), true);
    case ParityClass::y_div4: return Mu4::from(sign_power(exact_quarter(r.y + r.v, "y+v")), false);
    default: throw UnreachableBranch("d = 2 mod 8 forces y even and x odd");
    }
}

std::vector<CaseId> build_case_ids()
{
    std::vector<CaseId> ids;
    for (int c = 1; c <= 3; ++c)
        for (char s = 'a'; s <= 'g'; ++s) ids.push_back({Family::I, c, s});
    for (int c = 1; c <= 4; ++c)
        for (char s = 'a'; s <= 'd'; ++s) ids.push_back({Family::II, c, s});
    for (int c = 1; c <= 2; ++c)
        for (char s = 'a'; s <= 'f'; ++s) ids.push_back({Family::III, c, s});
    return ids;
}

} // namespace

std::string Mu4::to_string() const
{
    static constexpr std::array<const char*, 4> names{"1", "i", "-1", "-i"};
    return names[static_cast<std::size_t>(k & 3)];
}

u64 realize(Mu4 eta, u64 t, const PrimeField& field) noexcept
{
    return field.pow(t, static_cast<u64>(eta.k & 3));
}

int conjecture_for(i64 b)
{
    if (b == 0) throw GateRejected("b = 0 is outside every congruence family");
    if (is_odd(b)) return 1;
    const i64 r8 = mod_floor(b, 8);
    if (r8 == 4) return 2;
    if (r8 == 0) return 3;
    return 4;
}

std::string CaseId::to_string() const
{
    static constexpr std::array<const char*, 3> fam{"I", "II", "III"};
    std::string s = fam[static_cast<std::size_t>(family) - 1];
    s += '.';
    s += std::to_string(b_class);
    s += '.';
    s += subcase;
    return s;
}

const std::vector<CaseId>& all_case_ids()
{
    static const std::vector<CaseId> ids = build_case_ids();
    return ids;
}

bool is_valid_case(const CaseId& id) noexcept
{
    switch (id.family) {
    case Family::I: return id.b_class >= 1 && id.b_class <= 3 && id.subcase >= 'a' && id.subcase <= 'g';
    case Family::II: return id.b_class >= 1 && id.b_class <= 4 && id.subcase >= 'a' && id.subcase <= 'd';
    case Family::III: return id.b_class >= 1 && id.b_class <= 2 && id.subcase >= 'a' && id.subcase <= 'f';
    }
    return false;
}

Prediction predict(i64 b, const NormalizedRep& rep, const PrimeField& field)
{
    check_inputs(b, rep, field);
    switch (conjecture_for(b)) {
    case 1: return predict_conj1(b, rep, field);
    case 2: return predict_conj2(b, rep, field);
    case 3: return predict_conj3(b, rep, field);
    default: return predict_conj4(b, rep, field);
    }
}

Prediction predict(i64 b, const NormalizedRep& rep)
{
    return predict(b, rep, PrimeField(rep.p));
}

Mu4 predict_eta(i64 b, const NormalizedRep& rep, const PrimeField& field)
{
    check_inputs(b, rep, field);
    switch (conjecture_for(b)) {
    case 1: return eta_conj1(b, rep);
    case 2: return eta_conj2(b, rep);
    case 3: return eta_conj3(b, rep);
    default: return eta_conj4(b, rep);
    }
}

Mu4 predict_eta(i64 b, const NormalizedRep& rep)
{
    return predict_eta(b, rep, PrimeField(rep.p));
}

Prediction eta_to_uv(Mu4 eta, const NormalizedRep& rep, i64 b, const PrimeField& f)
{
    const u64 p = f.modulus();
    if (p % 4 != 1) throw GateRejected("p is not 1 mod 4");
    const bool p1mod8 = p % 8 == 1;
    const int alpha = eta.alpha();

    // eps^{(p-1)/4} = A + B sqrt(d) mod p.
    u64 A = 0, B = 0;
    std::string label;
    if (eta.is_real() && p1mod8) {
        A = signed_const(f, alpha, 1);
        label = "eta=alpha, p=1 mod 8";
    } else if (eta.is_real()) {
        u64 r = f.div(f.mul(f.reduce(rep.y), f.reduce(rep.v)), f.mul(f.reduce(rep.x), f.reduce(rep.u)));
        B = alpha > 0 ? f.neg(r) : r;
        label = "eta=alpha, p=5 mod 8";
    } else if (p1mod8) {
        B = signed_ratio(f, -alpha, rep.y, rep.x);
        label = "eta=alpha*i, p=1 mod 8";
    } else {
        A = signed_ratio(f, -alpha, rep.v, rep.u);
        label = "eta=alpha*i, p=5 mod 8";
    }

    // eps^n = (V + U sqrt d)/2 for odd b and V/2 + U sqrt d for even b.
    Prediction out;
    out.conjecture = conjecture_for(b);
    out.v_pred = f.add(A, A);
    out.u_pred = is_odd(b) ? f.add(B, B) : B;
    out.case_label = label;
    return out;
}

CaseId classify(i64 b, const NormalizedRep& rep)
{
    const PrimeField field(rep.p);
    check_inputs(b, rep, field);
    CaseId id;
    const i64 d8 = mod_floor(rep.d, 8);
    const auto quarter_parity = [](i64 n, const char* what) { return is_odd(exact_quarter(n, what)); };

    if (d8 == 5) {
        id.family = Family::I;
        const i64 r8 = mod_floor(b, 8);
        id.b_class = (r8 == 1 || r8 == 7) ? 1 : (r8 == 3 || r8 == 5) ? 2 : 3;
        switch (rep.parity) {
        case ParityClass::x_single_even: id.subcase = quarter_parity(rep.v, "v") ? 'b' : 'a'; break;
        case ParityClass::y_single_even: id.subcase = 'c'; break;
        case ParityClass::x_div4: id.subcase = quarter_parity(rep.x, "x") ? 'e' : 'd'; break;
        case ParityClass::y_div4: id.subcase = quarter_parity(rep.y + rep.v, "y+v") ? 'g' : 'f'; break;
        }
    } else if (d8 == 2) {
        id.family = Family::II;
        const i64 r32 = mod_floor(b, 32);
        const i64 folded = r32 > 16 ? 32 - r32 : r32; // 2, 6, 10, 14
        id.b_class = static_cast<int>((folded + 2) / 4);
        const bool v_odd = quarter_parity(rep.v, "v");
        switch (rep.parity) {
        case ParityClass::y_single_even: id.subcase = v_odd ? 'b' : 'a'; break;
        case ParityClass::y_div4: id.subcase = v_odd ? 'd' : 'c'; break;
        default: throw UnreachableBranch("d = 2 mod 8 forces y even");
        }
    } else if (d8 == 1) {
        id.family = Family::III;
        id.b_class = mod_floor(b, 16) == 0 ? 1 : 2;
        switch (rep.parity) {
        case ParityClass::x_single_even: id.subcase = 'a'; break;
        case ParityClass::y_single_even: id.subcase = 'b'; break;
        case ParityClass::x_div4: id.subcase = quarter_parity(rep.x + rep.v, "x+v") ? 'd' : 'c'; break;
        case ParityClass::y_div4: id.subcase = quarter_parity(rep.y + rep.v, "y+v") ? 'f' : 'e'; break;
        }
    } else {
        throw UnreachableBranch("d = " + std::to_string(rep.d) + " is not 1, 2 or 5 mod 8");
    }
    return id;
}

} // namespace qlucas
