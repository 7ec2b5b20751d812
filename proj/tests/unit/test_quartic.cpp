#include <gtest/gtest.h>

#include <set>

#include "qlucas/quartic.hpp"
#include "support/oracles.hpp"

using namespace qlucas;

namespace {

NormalizedRep rep_of(u64 p, i64 d, i64 x, i64 y, i64 u, i64 v)
{
    return normalize(Representation{p, d, x, y, u, v});
}

template <typename F>
void for_each_gated(i64 b_lo, i64 b_hi, u64 p_max, F&& fn)
{
    for (u64 p = 5; p <= p_max; p += 4) {
        if (!oracle::is_prime(p)) continue;
        const PrimeField field(p);
        for (i64 b = b_lo; b <= b_hi; ++b) {
            if (b == 0) continue;
            const GatedRep g = gated_representation(b, field);
            if (g.rep) fn(b, field, *g.rep);
        }
    }
}

// e^{(p-1)/4} for e = (r + s_coeff * s) / den, by repeated multiplication.
u64 slow_quarter_power(const QuadElement& e, u64 s, bool conj, u64 p)
{
    const i128 surd = static_cast<i128>(oracle::mod(e.surd, p)) * s % p;
    i128 num = oracle::mod(e.rational, p) + (conj ? p - surd : surd);
    const u64 val = oracle::mul(static_cast<u64>(num % p), oracle::inv_scan(oracle::mod(e.denom, p), p), p);
    return oracle::pow_slow(val, (p - 1) / 4, p);
}

} // namespace

TEST(Embedding, Example)
{
    const PrimeField f(29);
    const Embedding e = make_embedding(rep_of(29, 5, -3, 2, 5, 2), f);
    EXPECT_EQ(e.t, 17u);
    EXPECT_EQ(e.s, 11u);
    EXPECT_EQ(embed(fundamental_unit(1), e, f), 6u);
    EXPECT_THROW(make_embedding(1, 0, 1, 2, f), ZeroDenominator);
    EXPECT_THROW(make_embedding(1, 2, 0, 2, f), ZeroDenominator);
    EXPECT_THROW(make_embedding(1, 2, 1, 29, f), ZeroDenominator);
}

TEST(Embedding, WellFormedOnGatedInstances)
{
    for_each_gated(-30, 30, 5000, [](i64 b, const PrimeField& f, const NormalizedRep& r) {
        const Embedding e = make_embedding(r, f);
        ASSERT_EQ(f.mul(e.t, e.t), f.modulus() - 1) << b;
        ASSERT_EQ(f.mul(e.s, e.s), f.reduce(r.d)) << b;
        ASSERT_EQ(f.reduce(r.x), f.mul(f.reduce(r.y), f.mul(e.s, e.t)));
        ASSERT_EQ(f.reduce(r.u), f.mul(f.reduce(r.v), e.t));
    });
}

TEST(FundamentalUnit, Shapes)
{
    const QuadElement odd = fundamental_unit(3);
    EXPECT_EQ(odd.rational, 3);
    EXPECT_EQ(odd.surd, 1);
    EXPECT_EQ(odd.denom, 2);
    const QuadElement even = fundamental_unit(-6);
    EXPECT_EQ(even.rational, -3);
    EXPECT_EQ(even.surd, 1);
    EXPECT_EQ(even.denom, 1);
    EXPECT_THROW(fundamental_unit(0), GateRejected);
}

TEST(ExtractEta, Examples)
{
    EXPECT_EQ(extract_eta(1, rep_of(29, 5, -3, 2, 5, 2)).eta, Mu4{2});
    const NormalizedRep r41 = rep_of(41, 5, -6, 1, 5, 4);
    const EtaPair e = extract_eta(1, r41);
    EXPECT_EQ(e.eta, Mu4{1});
    const PrimeField f(41);
    const Embedding emb = make_embedding(r41, f);
    EXPECT_EQ(realize(e.eta, emb.t, f), f.pow(embed(fundamental_unit(1), emb, f), 10));
    EXPECT_THROW(extract_eta(1, rep_of(5, 5, 0, 1, 1, 2)), GateRejected);
}

TEST(ExtractEta, ZeroElementIsNotAUnit)
{
    const PrimeField f(29);
    const Embedding emb = make_embedding(rep_of(29, 5, -3, 2, 5, 2), f);
    EXPECT_THROW(extract_eta(QuadElement{0, 0, 1}, emb, f), NotQuarticUnit);
}

TEST(ExtractEta, AgreesWithSlowPowerAndConjugateCoherence)
{
    for_each_gated(-20, 20, 4000, [](i64 b, const PrimeField& f, const NormalizedRep& r) {
        const u64 p = f.modulus();
        const Embedding emb = make_embedding(r, f);
        const QuadElement eps = fundamental_unit(b);
        const EtaPair e = extract_eta(eps, emb, f);
        ASSERT_EQ(realize(e.eta, emb.t, f), slow_quarter_power(eps, emb.s, false, p));
        ASSERT_EQ(realize(e.eta_bar, emb.t, f), slow_quarter_power(eps, emb.s, true, p));
        // Norm -1: eta_bar = (-1)^{(p-1)/4} eta^{-1}.
        const Mu4 expect = e.eta.inverse() * Mu4{((p - 1) / 4) % 2 ? 2 : 0};
        ASSERT_EQ(e.eta_bar, expect) << b << " " << p;
    });
}

TEST(SurdReconstruct, Examples)
{
    const PrimeField f(29);
    EXPECT_EQ(lemma31_reconstruct(Mu4{2}, Mu4{0}, -3, 2, 5, 2, f), (SurdResidue{0, 21}));
    EXPECT_EQ(lemma31_reconstruct(Mu4{0}, Mu4{0}, -3, 2, 5, 2, f), (SurdResidue{1, 0}));
    EXPECT_EQ(f.mul(21, 11), 28u);

    const PrimeField f41(41);
    const NormalizedRep r = rep_of(41, 5, -6, 1, 5, 4);
    const Embedding emb = make_embedding(r, f41);
    const SurdResidue ab = lemma31_reconstruct(Mu4{1}, Mu4{3}, r.x, r.y, r.u, r.v, f41);
    const u64 e = embed(fundamental_unit(1), emb, f41);
    EXPECT_EQ(f41.add(ab.a, f41.mul(ab.b, emb.s)), f41.pow(e, 10));

    EXPECT_THROW(lemma31_reconstruct(Mu4{0}, Mu4{0}, 0, 2, 5, 2, f), ZeroDenominator);
    EXPECT_THROW(lemma31_reconstruct(Mu4{0}, Mu4{0}, -3, 29, 5, 2, f), ZeroDenominator);
}

TEST(SurdReconstruct, Branches)
{
    EXPECT_EQ(lemma31_branch(Mu4{0}, Mu4{2}), 0);
    EXPECT_EQ(lemma31_branch(Mu4{2}, Mu4{1}), 1);
    EXPECT_EQ(lemma31_branch(Mu4{3}, Mu4{0}), 2);
    EXPECT_EQ(lemma31_branch(Mu4{1}, Mu4{3}), 3);
}

TEST(SurdReconstruct, RoundTripAllBranches)
{
    std::set<int> branches;
    u64 count = 0;
    for_each_gated(-16, 16, 3000, [&](i64 b, const PrimeField& f, const NormalizedRep& r) {
        const Embedding emb = make_embedding(r, f);
        std::vector<QuadElement> elements{fundamental_unit(b)};
        // k + sqrt(d) with non-residue norm gives one real and one imaginary eta.
        for (i64 k = 1; k < 40 && elements.size() < 3; ++k)
            if (f.legendre(f.reduce(k * k - r.d)) == -1) elements.push_back({k, 1, 1});
        for (const QuadElement& el : elements) {
            const EtaPair e = extract_eta(el, emb, f);
            const SurdResidue ab = lemma31_reconstruct(e.eta, e.eta_bar, r.x, r.y, r.u, r.v, f);
            const u64 plus = f.pow(embed(el, emb, f), (f.modulus() - 1) / 4);
            const u64 minus = f.pow(embed(el, emb, f, true), (f.modulus() - 1) / 4);
            ASSERT_EQ(f.add(ab.a, f.mul(ab.b, emb.s)), plus) << b << " " << f.modulus();
            ASSERT_EQ(f.sub(ab.a, f.mul(ab.b, emb.s)), minus) << b << " " << f.modulus();
            branches.insert(lemma31_branch(e.eta, e.eta_bar));
            ++count;
        }
    });
    EXPECT_EQ(branches.size(), 4u);
    EXPECT_GE(count, 1000u);
}

TEST(GeneralForm, Validate)
{
    EXPECT_NO_THROW((GeneralForm{2, 2, 3}.validate()));
    EXPECT_THROW((GeneralForm{0, 1, 1}.validate()), std::invalid_argument);
    EXPECT_THROW((GeneralForm{-1, 0, -5}.validate()), std::invalid_argument);
    EXPECT_THROW((GeneralForm{1, 4, 1}.validate()), std::invalid_argument);
    EXPECT_THROW((GeneralForm{2, 2, 4}.validate()), std::invalid_argument);
    EXPECT_EQ((GeneralForm{2, 2, 3}.disc()), -20);
}

TEST(TwoAdic, Examples)
{
    EXPECT_TRUE(form_represents_1_or_5_2adically({1, 0, 5}));
    // Odd values of 2x^2 + 2xy + 3y^2 are all 3 mod 4.
    EXPECT_FALSE(form_represents_1_or_5_2adically({2, 2, 3}));
    for (i64 d = 1; d < 100; ++d) EXPECT_TRUE(form_represents_1_or_5_2adically({1, 0, d}));
}

TEST(TwoAdic, AgreesWithModEightSearch)
{
    for (i64 d = 2; d <= 60; ++d)
        for (i64 D : {-4 * d, -d}) {
            if (mod_floor(D, 4) != 0 && mod_floor(D, 4) != 1) continue;
            for (const oracle::Form& g : oracle::reduced_forms(D))
                EXPECT_EQ(form_represents_1_or_5_2adically({g.a, g.b, g.c}), oracle::two_adic_ok(g))
                    << g.a << " " << g.b << " " << g.c;
        }
}

TEST(SumOfTwoSquares, AgreesWithBruteForce)
{
    for (u64 n = 0; n < 5000; ++n) {
        bool brute = false;
        i64 best_u = -1;
        for (i64 u = 0; static_cast<u64>(u * u) <= n; ++u)
            for (i64 v = 0; v <= u; ++v)
                if (static_cast<u64>(u * u + v * v) == n) {
                    brute = true;
                    best_u = std::max(best_u, u);
                }
        ASSERT_EQ(is_sum_of_two_squares(n), brute) << n;
        const auto uv = decompose_two_squares(n);
        ASSERT_EQ(uv.has_value(), brute) << n;
        if (uv) {
            ASSERT_EQ((*uv)[0], best_u);
            ASSERT_GE((*uv)[0], (*uv)[1]);
            ASSERT_GE((*uv)[1], 0);
            ASSERT_EQ(static_cast<u64>((*uv)[0] * (*uv)[0] + (*uv)[1] * (*uv)[1]), n);
        }
    }
}

TEST(IsotropicWitness, Examples)
{
    IsotropicWitness w = find_isotropic_witness({1, 0, 7});
    EXPECT_EQ(w.x1, 1);
    EXPECT_EQ(w.y1, 0);
    EXPECT_EQ(w.u1, 1);
    EXPECT_EQ(w.v1, 0);
    EXPECT_EQ(w.a_prime, 1);

    // 2x^2 + 2xy + 3y^2: f(1, 0) = 2 = 1 + 1 beats f(0, 1) = 3 and f(1, +-1) in {3, 7}.
    w = find_isotropic_witness({2, 2, 3});
    EXPECT_EQ(w.x1, 1);
    EXPECT_EQ(w.y1, 0);
    EXPECT_EQ(w.u1, 1);
    EXPECT_EQ(w.v1, 1);
    EXPECT_EQ(w.a_prime, 2);

    w = find_isotropic_witness({5, 4, 7});
    EXPECT_EQ(w.x1, 1);
    EXPECT_EQ(w.y1, 0);
    EXPECT_EQ(w.a_prime, 5);

    EXPECT_THROW(find_isotropic_witness({2, 2, 3}, 0), SearchExhausted);
}

TEST(IsotropicWitness, AgreesWithBruteForce)
{
    int found = 0;
    for (i64 d = 2; d <= 50; ++d)
        for (const oracle::Form& g : oracle::reduced_forms(-4 * d)) {
            if (oracle::gcd(oracle::gcd(g.a, g.b), g.c) != 1) continue;
            const auto brute = oracle::isotropic(g, 20);
            if (!brute) {
                // Some classes carry a local obstruction; both searches must give up.
                EXPECT_THROW(find_isotropic_witness({g.a, g.b, g.c}, 20), SearchExhausted);
                continue;
            }
            ++found;
            const IsotropicWitness w = find_isotropic_witness({g.a, g.b, g.c}, 20);
            ASSERT_EQ(w.x1, (*brute)[0]);
            ASSERT_EQ(w.y1, (*brute)[1]);
            ASSERT_EQ(w.a_prime, (*brute)[2]);
            ASSERT_EQ(w.u1 * w.u1 + w.v1 * w.v1, w.a_prime);
        }
    EXPECT_GT(found, 100);
}

TEST(Pipeline, PrincipalForm)
{
    const Section3Data s = section3_pipeline({1, 0, 5}, PrimeField(29), 5);
    EXPECT_TRUE(s.principal_shortcut);
    EXPECT_EQ(s.a_prime, 1);
    EXPECT_EQ(s.X, -3);
    EXPECT_EQ(s.Y, 2);
    EXPECT_EQ(s.U, 5);
    EXPECT_EQ(s.V, 2);
    EXPECT_TRUE(s.identity_holds(5, 29));
}

TEST(Pipeline, PrincipalMatchesRepresent)
{
    for_each_gated(1, 16, 3000, [](i64 b, const PrimeField& f, const NormalizedRep& r) {
        const Section3Data s = section3_pipeline({1, 0, r.d}, f, r.d);
        ASSERT_EQ(s.a_prime, 1);
        ASSERT_EQ(s.X, r.x) << b;
        ASSERT_EQ(s.Y, r.y);
        ASSERT_EQ(s.U, r.u);
        ASSERT_EQ(s.V, r.v);
        ASSERT_TRUE(s.identity_holds(r.d, f.modulus()));
    });
}

TEST(Pipeline, Preconditions)
{
    // disc -20 does not match d = 6.
    EXPECT_THROW(section3_pipeline({2, 2, 3}, PrimeField(29), 6), PipelinePreconditionFailed);
    // p = 3 mod 4.
    EXPECT_THROW(section3_pipeline({3, 2, 4}, PrimeField(23), 11), PipelinePreconditionFailed);
    // (11/13) = -1.
    EXPECT_THROW(section3_pipeline({3, 2, 4}, PrimeField(13), 11), PipelinePreconditionFailed);
    // 53 = 3^2 + 11 * 2^2 lies in the principal class, not in (3, 2, 4).
    EXPECT_THROW(section3_pipeline({3, 2, 4}, PrimeField(53), 11), NotRepresented);
    EXPECT_THROW(section3_pipeline({1, 4, 1}, PrimeField(29), 5), std::invalid_argument);
}

TEST(Pipeline, OddDiscriminantScaling)
{
    // 13 = f(2, 1) for 2x^2 + xy + 3y^2 of discriminant -23; y' odd forces scale 2.
    const Section3Data s = section3_pipeline({2, 1, 3}, PrimeField(13), 23);
    EXPECT_EQ(s.scale, 2);
    EXPECT_EQ(s.a_prime, 2);
    EXPECT_TRUE(s.identity_holds(23, 13));
    EXPECT_EQ(4 * 2 * 13, s.X * s.X + 23 * s.Y * s.Y);
}

// The frozen non-principal golden instance, re-derived from scratch: scan
// d = 2..50 for the first reduced non-principal form of discriminant -4d in
// the principal genus that passes the 2-adic test, then its smallest prime
// p = 1 (mod 4) with (d/p) = 1, represented by it, coprime to 2a'd.
TEST(Pipeline, NonPrincipalGolden)
{
    struct Found {
        i64 d;
        oracle::Form f;
        u64 p;
    };
    std::optional<Found> found;
    for (i64 d = 2; d <= 50 && !found; ++d)
        for (const oracle::Form& g : oracle::reduced_forms(-4 * d)) {
            if (g == oracle::Form{1, 0, d}) continue;
            if (!oracle::in_principal_genus(g, d) || !oracle::two_adic_ok(g)) continue;
            const auto iso = oracle::isotropic(g, 20);
            if (!iso) continue;
            const i64 a_prime = (*iso)[2];
            for (u64 p = 5; p < 10000 && !found; p += 4) {
                if (!oracle::is_prime(p) || oracle::legendre_scan(oracle::mod(d, p), p) != 1) continue;
                if (oracle::gcd(static_cast<i64>(p), 2 * a_prime * d) != 1) continue;
                bool represented = false;
                for (i64 x = -100; x <= 100 && !represented; ++x)
                    for (i64 y = -100; y <= 100 && !represented; ++y)
                        represented = g.eval(x, y) == static_cast<i128>(p);
                if (represented) found = Found{d, g, p};
            }
            if (found) break;
        }
    ASSERT_TRUE(found);
    EXPECT_EQ(found->d, 11);
    EXPECT_EQ(found->f, (oracle::Form{3, -2, 4}));
    EXPECT_EQ(found->p, 5u);

    // Frozen output. (3, -2, 4) and (3, 2, 4) are the two non-principal
    // classes; both are pinned.
    const Section3Data s = section3_pipeline({3, -2, 4}, PrimeField(5), 11);
    EXPECT_FALSE(s.principal_shortcut);
    EXPECT_TRUE(s.identity_holds(11, 5));
    EXPECT_EQ(s.a_prime, 4);
    EXPECT_EQ(s.a_prime * 5, s.X * s.X + 11 * s.Y * s.Y);
    EXPECT_EQ(s.a_prime * 5, s.U * s.U + s.V * s.V);

    const Section3Data t = section3_pipeline({3, 2, 4}, PrimeField(5), 11);
    EXPECT_EQ(t.x, -1);
    EXPECT_EQ(t.y, 1);
    EXPECT_EQ(t.witness.x1, 0);
    EXPECT_EQ(t.witness.y1, 1);
    EXPECT_EQ(t.a_prime, 4);
    EXPECT_EQ(t.g, (GeneralForm{4, -2, 3}));
    EXPECT_EQ(t.xp, 1);
    EXPECT_EQ(t.yp, 1);
    EXPECT_EQ(t.X, 3);
    EXPECT_EQ(t.Y, 1);
    EXPECT_EQ(t.U, 2);
    EXPECT_EQ(t.V, 4);
    EXPECT_EQ(t.scale, 1);
    EXPECT_TRUE(t.identity_holds(11, 5));
}

TEST(Pipeline, IdentityOverManyForms)
{
    u64 runs = 0;
    for (i64 d = 2; d <= 60; ++d)
        for (i64 D : {-4 * d, -d}) {
            if (mod_floor(D, 4) != 0 && mod_floor(D, 4) != 1) continue;
            for (const oracle::Form& g : oracle::reduced_forms(D))
                for (u64 p = 5; p < 2000; p += 4) {
                    if (!oracle::is_prime(p) || static_cast<u64>(d) % p == 0) continue;
                    const PrimeField f(p);
                    if (f.legendre(f.reduce(d)) != 1) continue;
                    try {
                        const Section3Data s = section3_pipeline({g.a, g.b, g.c}, f, d);
                        ASSERT_TRUE(s.identity_holds(d, p)) << g.a << " " << g.b << " " << g.c << " " << p;
                        // X^2 + dY^2 and U^2 + V^2 both vanish mod p, so they feed an embedding.
                        const Embedding e = make_embedding(s.X, s.Y, s.U, s.V, f);
                        ASSERT_EQ(f.mul(e.t, e.t), p - 1);
                        ASSERT_EQ(f.mul(e.s, e.s), f.reduce(d));
                        ++runs;
                    } catch (const NotRepresented&) {
                    } catch (const PipelinePreconditionFailed&) {
                    } catch (const ZeroDenominator&) {
                    }
                }
        }
    EXPECT_GT(runs, 1000u);
}
