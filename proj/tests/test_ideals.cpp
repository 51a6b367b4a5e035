#include <gtest/gtest.h>

#include <random>
#include <string>

#include "support.hpp"
#include "tambara/ideals.hpp"

using namespace tambara;
using namespace tambara::testing;

namespace {

Ideal principal(const GroupParams& P, unsigned level, const Element& g)
{
    return ideal_from_generators(P, level, {g});
}

// Every word over {L,S} of the given length with exactly `s` letters S.
std::vector<std::string> words(unsigned length, unsigned s)
{
    std::vector<std::string> out;
    for (unsigned mask = 0; mask < (1u << length); ++mask) {
        if (static_cast<unsigned>(__builtin_popcount(mask)) != s)
            continue;
        std::string w;
        for (unsigned t = 0; t < length; ++t)
            w += (mask >> t & 1u) ? 'S' : 'L';
        out.push_back(w);
    }
    return out;
}

} // namespace

TEST(Ideals, FromGeneratorsExamples)
{
    GroupParams P(2, 2);
    EXPECT_EQ(ideal_from_generators(P, 1, {one(P, 1)}), Ideal::unit(P, 1));
    EXPECT_EQ(ideal_from_generators(P, 2, {}), Ideal::zero(P, 2));
    EXPECT_EQ(principal(P, 1, C(P, 1, 3)).lattice().basis(), (Matrix{{3, 0}, {0, 3}}));
    EXPECT_THROW(ideal_from_generators(P, 1, {one(P, 2)}), LevelError);
}

TEST(Ideals, JExamples)
{
    GroupParams P(2, 3);
    for (unsigned l = 0; l <= 3; ++l) {
        EXPECT_EQ(J_ideal(P, l, l, 0), Ideal::zero(P, l));
        EXPECT_EQ(J_ideal(P, l, 0, 1), Ideal::unit(P, l));
    }
    Ideal J = J_ideal(P, 1, 0, 3);
    EXPECT_TRUE(J.contains(C(P, 1, 3)));
    EXPECT_TRUE(J.contains(F(P, 1, 0)));
    EXPECT_FALSE(J.contains(one(P, 1)));
    EXPECT_FALSE(J.contains(C(P, 1, 2)));
    EXPECT_THROW(J_ideal(P, 1, 2, 3), LevelError);
}

TEST(Ideals, RecognizeExamples)
{
    GroupParams P(3, 3);
    auto d = recognize_J(J_ideal(P, 2, 1, 5));
    ASSERT_TRUE(d.has_value());
    EXPECT_EQ(*d, (JDescriptor{2, 1, 5}));
    auto u = recognize_J(Ideal::unit(P, 2));
    ASSERT_TRUE(u.has_value());
    EXPECT_EQ(u->cut, 0u);
    EXPECT_EQ(u->x, 1);
    for (unsigned l = 1; l <= 3; ++l)
        EXPECT_FALSE(recognize_J(principal(P, l, scale(2, F(P, l, l - 1)))).has_value());
}

TEST(Ideals, RecognizeRoundTrip)
{
    for (unsigned long p : {2UL, 3UL}) {
        GroupParams P(p, 3);
        for (unsigned l = 0; l <= 3; ++l)
            for (unsigned k = 0; k <= l; ++k)
                for (long x : {0L, 2L, 3L, 4L, 5L, 9L, 12L}) {
                    auto d = recognize_J(J_ideal(P, l, k, x));
                    ASSERT_TRUE(d.has_value());
                    ASSERT_EQ(J_ideal(P, l, d->cut, d->x), J_ideal(P, l, k, x));
                    ASSERT_EQ(d->x, x);
                }
    }
}

TEST(Ideals, JMembershipCharacterization)
{
    // m_l + sum m_i F_{l,i} lies in J_{l,k}(x) iff x divides m_l and m_0..m_{k-1}
    std::mt19937_64 rng(11);
    for (unsigned long p : {2UL, 3UL, 5UL}) {
        GroupParams P(p, 4);
        for (unsigned l = 0; l <= 4; ++l)
            for (unsigned k = 0; k <= l; ++k)
                for (long x : {0L, 1L, 2L, 3L, 6L}) {
                    Ideal J = J_ideal(P, l, k, x);
                    for (int t = 0; t < 30; ++t) {
                        FCoords c{l, 0, IntVec(l)};
                        std::uniform_int_distribution<int> d(-8, 8);
                        c.m_top = x * d(rng) + (t % 3 == 0 ? d(rng) : 0);
                        for (unsigned i = 0; i < l; ++i)
                            c.f[i] = (i < k && t % 2 == 0) ? x * d(rng) : d(rng);
                        bool expect = divides(Int(x), c.m_top);
                        for (unsigned i = 0; i < k; ++i)
                            expect = expect && divides(Int(x), c.f[i]);
                        ASSERT_EQ(J.contains(from_f(P, c)), expect);
                    }
                }
    }
}

TEST(Ideals, CheckTambaraExamples)
{
    GroupParams P(2, 2);
    auto qq = IdealSequence({J_ideal(P, 0, 0, 3), J_ideal(P, 1, 1, 3)});
    EXPECT_EQ(check_tambara(qq).status, TambaraStatus::Certified);
    EXPECT_EQ(check_tambara(IdealSequence::zero(P, 2)).status, TambaraStatus::Certified);
    // a unit top does not absorb everything: res(1) = 1 must land in (2)
    auto absorb = IdealSequence({J_ideal(P, 0, 0, 2), Ideal::unit(P, 1)});
    TambaraReport rep = check_tambara(absorb);
    EXPECT_EQ(rep.status, TambaraStatus::Violated);
    ASSERT_EQ(rep.details.size(), 1u);
    EXPECT_NE(rep.details[0].find("res"), std::string::npos);
    auto unit_all = IdealSequence({Ideal::unit(P, 0), Ideal::unit(P, 1)});
    EXPECT_EQ(check_tambara(unit_all).status, TambaraStatus::Certified);
    EXPECT_THROW(check_tambara(qq, 0), PreconditionViolated);
}

TEST(Ideals, CheckTambaraViolations)
{
    GroupParams P(2, 2);
    // ind(2) = 2X[1,0] is not a multiple of 3
    auto bad_ind = IdealSequence({J_ideal(P, 0, 0, 2), J_ideal(P, 1, 1, 3)});
    EXPECT_EQ(check_tambara(bad_ind).status, TambaraStatus::Violated);
    // res(X[1,0]) = 2 is not in (3)
    auto bad_res = IdealSequence({J_ideal(P, 0, 0, 3), Ideal::unit(P, 1)});
    EXPECT_EQ(check_tambara(bad_res).status, TambaraStatus::Violated);
    // S((2)) = J_{1,0}(4) is the smallest admissible top
    auto tight = IdealSequence({J_ideal(P, 0, 0, 2), J_ideal(P, 1, 0, 4)});
    EXPECT_EQ(check_tambara(tight).status, TambaraStatus::Certified);
    // jnd(2) = 2 + X[1,0] is not in (2); ind and res clauses still hold
    auto bad_jnd = IdealSequence({J_ideal(P, 0, 0, 2), principal(P, 1, C(P, 1, 2))});
    EXPECT_EQ(check_tambara(bad_jnd).status, TambaraStatus::Violated);
    // a Z-lattice that is not closed under X[1,0]
    auto not_ideal = IdealSequence(
        {Ideal::unit(P, 0), Ideal(P, 1, Lattice::from_generators(2, {{0, 1}}))});
    EXPECT_EQ(check_tambara(not_ideal).status, TambaraStatus::Violated);
}

TEST(Ideals, CheckTambaraSampledOnNonJ)
{
    GroupParams P(2, 2);
    auto seq = L_op(IdealSequence({Ideal::zero(P, 0), principal(P, 1, scale(2, F(P, 1, 0)))}));
    TambaraReport rep = check_tambara(seq);
    EXPECT_EQ(rep.status, TambaraStatus::Sampled);
    EXPECT_TRUE(rep.ok());
}

TEST(Ideals, RestrictExamples)
{
    GroupParams P(2, 3);
    auto seq = apply_ops(IdealSequence::base(P, 3), "LS");
    EXPECT_EQ(restrict(seq, seq.top()), seq);
    EXPECT_EQ(restrict(L_op(seq), seq.top()), seq);
    auto z = L_op(IdealSequence::zero(P, 0));
    EXPECT_EQ(restrict(z, 0), IdealSequence::zero(P, 0));
    EXPECT_THROW(restrict(seq, 3), LevelError);
}

TEST(Ideals, LExamples)
{
    GroupParams P(2, 2);
    EXPECT_EQ(L_op(IdealSequence::base(P, 3))[1], J_ideal(P, 1, 0, 3));
    EXPECT_EQ(L_op(IdealSequence::zero(P, 0))[1], J_ideal(P, 1, 0, 0));
    EXPECT_EQ(L_op(IdealSequence::zero(P, 0))[1], principal(P, 1, F(P, 1, 0)));
    EXPECT_EQ(L_op(IdealSequence::base(P, 2))[1], J_ideal(P, 1, 0, 2));
    EXPECT_THROW(L_op(IdealSequence::zero(P, 2)), RankExceeded);
}

TEST(Ideals, SExamples)
{
    GroupParams P(2, 2);
    SResult a = S_op(IdealSequence::base(P, 3));
    EXPECT_TRUE(a.certified);
    EXPECT_EQ(a.seq[1], J_ideal(P, 1, 1, 3));
    SResult b = S_op(IdealSequence::base(P, 2));
    EXPECT_TRUE(b.certified);
    EXPECT_EQ(b.seq[1], J_ideal(P, 1, 0, 4));
    SResult c = S_op(IdealSequence::zero(P, 0));
    EXPECT_TRUE(c.certified);
    EXPECT_EQ(c.seq, IdealSequence::zero(P, 1));
    EXPECT_THROW(S_op(IdealSequence::zero(P, 2)), RankExceeded);
}

TEST(Ideals, SFallbackIsFlagged)
{
    GroupParams P(2, 2);
    auto seq = IdealSequence({Ideal::zero(P, 0), principal(P, 1, scale(2, F(P, 1, 0)))});
    SResult r = S_op(seq);
    EXPECT_FALSE(r.certified);
    EXPECT_TRUE(includes(L_op(seq)[2], r.seq[2]));
}

// ---------------------------------------------------------------------------

class IdealProperties : public ::testing::TestWithParam<unsigned long> {};

TEST_P(IdealProperties, ExtensionsRestrictAndNest)
{
    GroupParams P(GetParam(), 3);
    std::vector<IdealSequence> seeds = {IdealSequence::zero(P, 0), IdealSequence::base(P, 3),
                                        IdealSequence::base(P, 5), IdealSequence::base(P, P.p),
                                        IdealSequence::base(P, 1)};
    for (const auto& seed : seeds)
        for (const std::string w : {"", "L", "S", "LS", "SL", "SS"}) {
            auto seq = apply_ops(seed, w);
            auto Ls = L_op(seq);
            auto Ss = S_op(seq);
            ASSERT_EQ(restrict(Ls, seq.top()), seq);
            ASSERT_EQ(restrict(Ss.seq, seq.top()), seq);
            ASSERT_TRUE(includes(Ls[Ls.top()], Ss.seq[Ss.seq.top()]));
            ASSERT_TRUE(check_tambara(Ls).ok());
            ASSERT_TRUE(check_tambara(Ss.seq).ok());
        }
}

TEST_P(IdealProperties, LAndSOnJFamily)
{
    // L(J_{l-1,k}(n)) = J_{l,k}(n); S(J_{l-1,k}(n)) = J_{l,k}(n) (k <= l-2) or (n) (k = l-1).
    // S is checked against plain generation, not against its own closed form.
    const unsigned long p = GetParam();
    GroupParams P(p, 4);
    for (long q : {0L, 3L, 5L, 7L}) {
        if (q == static_cast<long>(p))
            continue;
        for (unsigned l = 1; l <= 4; ++l)
            for (unsigned k = 0; k <= l - 1; ++k) {
                Ideal J = J_ideal(P, l - 1, k, q);
                ASSERT_EQ(L_ideal(J), J_ideal(P, l, k, q)) << "q=" << q << " l=" << l;
                Ideal expect = k + 2 <= l ? J_ideal(P, l, k, q) : J_ideal(P, l, l, q);
                ASSERT_EQ(S_generated(J, 1), expect) << "q=" << q << " l=" << l << " k=" << k;
                ASSERT_EQ(*closed_form_S(J), expect);
                ASSERT_EQ(*closed_form_L(J), L_ideal(J));
            }
    }
}

TEST_P(IdealProperties, PPowerFamily)
{
    const unsigned long p = GetParam();
    GroupParams P(p, 4);
    for (unsigned e = 0; e <= 2; ++e) {
        const Int x = P.pow(e + 1);
        for (unsigned l = 1; l <= 4; ++l) {
            Ideal J = J_ideal(P, l - 1, 0, x);
            ASSERT_EQ(L_ideal(J), J_ideal(P, l, 0, x));
            Ideal S = S_generated(J, 1);
            if (l >= 2 || e == 0) {
                ASSERT_EQ(S, J_ideal(P, l, 0, x * p)) << "e=" << e << " l=" << l;
                ASSERT_EQ(*closed_form_S(J), S);
            } else {
                // from level 0 the norms of (p^{e+1}) only reach p^e F_{1,0}
                ASSERT_EQ(S, ideal_from_generators(P, 1, {scale(x * p, one(P, 1)),
                                                          scale(P.pow(e), F(P, 1, 0))}));
                ASSERT_FALSE(S.contains(F(P, 1, 0)));
                ASSERT_FALSE(closed_form_S(J).has_value());
                ASSERT_FALSE(S_op(IdealSequence({J})).certified);
            }
        }
    }
}

TEST_P(IdealProperties, CoveringIndices)
{
    const unsigned long p = GetParam();
    GroupParams P(p, 4);
    for (unsigned l = 1; l <= 4; ++l) {
        for (long q : {3L, 5L, 7L}) {
            if (q == static_cast<long>(p))
                continue;
            for (unsigned k = 0; k < l; ++k)
                ASSERT_EQ(index(J_ideal(P, l, k + 1, q).lattice(), J_ideal(P, l, k, q).lattice()),
                          Int(q));
        }
        for (unsigned e = 0; e <= 2; ++e)
            ASSERT_EQ(index(J_ideal(P, l, 0, P.pow(e + 2)).lattice(),
                            J_ideal(P, l, 0, P.pow(e + 1)).lattice()),
                      Int(p));
    }
}

TEST_P(IdealProperties, PPathIndependence)
{
    // Any word with l letters, s of them S, sends (p) to J_{l,0}(p^{s+1}).
    const unsigned long p = GetParam();
    GroupParams P(p, 4);
    for (unsigned l = 1; l <= 4; ++l)
        for (unsigned s = 0; s <= l; ++s) {
            const Ideal expect = J_ideal(P, l, 0, P.pow(s + 1));
            for (const auto& w : words(l, s)) {
                bool cert = false;
                auto seq = apply_ops(IdealSequence::base(P, p), w, 3, &cert);
                ASSERT_TRUE(cert);
                ASSERT_EQ(seq[l], expect) << w;
                // same path with S taken from generation
                Ideal cur = J_ideal(P, 0, 0, p);
                for (char c : w)
                    cur = c == 'L' ? L_ideal(cur) : S_generated(cur, 1);
                ASSERT_EQ(cur, expect) << w;
            }
        }
}

TEST_P(IdealProperties, IdealsBetweenZeroFamily)
{
    // Lattices between J_{l,k+1}(0) and J_{l,k}(0) are J_{l,k+1}(0) + (n F_{l,k}).
    const unsigned long p = GetParam();
    GroupParams P(p, 3);
    for (unsigned l = 1; l <= 3; ++l)
        for (unsigned k = 0; k < l; ++k) {
            const Ideal lo = J_ideal(P, l, k + 1, 0), hi = J_ideal(P, l, k, 0);
            ASSERT_EQ(index(lo.lattice(), hi.lattice()), std::nullopt);
            auto q = invariant_factors(lo.lattice(), hi.lattice());
            ASSERT_EQ(q.free_rank, 1u);
            ASSERT_TRUE(q.torsion.empty());
            for (long n = 0; n <= 8; ++n) {
                Element g = scale(Int(n), F(P, l, k));
                auto gens = lo.basis_elements();
                gens.push_back(g);
                Lattice span = from_generators(l + 1, [&] {
                    std::vector<IntVec> v;
                    for (const auto& e : gens)
                        v.push_back(e.coeffs());
                    return v;
                }());
                Ideal mid(P, l, span);
                ASSERT_TRUE(mid.is_ring_ideal());
                ASSERT_EQ(mid, ideal_from_generators(P, l, gens));
                ASSERT_TRUE(includes(hi, mid) && includes(mid, lo));
            }
        }
}

TEST_P(IdealProperties, NormOfSumKeepsGenerationComplete)
{
    // For q prime to p and I = (q) at level l-1, bounded generation already reaches S(I).
    const unsigned long p = GetParam();
    GroupParams P(p, 3);
    for (long q : {3L, 5L}) {
        if (q == static_cast<long>(p))
            continue;
        Ideal I = J_ideal(P, 1, 1, q);
        for (int B = 1; B <= 3; ++B)
            ASSERT_EQ(S_generated(I, B), S_generated(I, 1));
    }
}

INSTANTIATE_TEST_SUITE_P(Primes, IdealProperties, ::testing::Values(2UL, 3UL));
