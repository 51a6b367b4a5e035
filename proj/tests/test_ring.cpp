#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "tambara/ring.hpp"

using namespace tambara;
using namespace tambara::testing;

TEST(RingCore, AddExamples)
{
    GroupParams P(2, 2);
    EXPECT_TRUE(add(X(P, 1, 0), neg(X(P, 1, 0))).is_zero());
    Element a = scale(2, X(P, 2, 0));
    Element b = add(scale(3, X(P, 2, 0)), X(P, 2, 2));
    EXPECT_EQ(add(a, b), Element(P, 2, {5, 0, 1}));
    EXPECT_THROW(add(X(P, 1, 0), X(P, 2, 0)), LevelError);
}

TEST(RingCore, MulExamples)
{
    GroupParams P3(3, 2);
    EXPECT_EQ(mul(X(P3, 2, 0), X(P3, 2, 1)), scale(3, X(P3, 2, 0)));
    GroupParams P2(2, 1);
    EXPECT_EQ(mul(X(P2, 1, 0), X(P2, 1, 0)), scale(2, X(P2, 1, 0)));
    std::mt19937_64 rng(1);
    for (unsigned k = 0; k <= 2; ++k) {
        Element a = random_element(rng, P3, k);
        EXPECT_EQ(mul(X(P3, k, k), a), a);
    }
    EXPECT_THROW(mul(X(P3, 1, 0), X(P3, 2, 0)), LevelError);
}

TEST(RingCore, OneAndZero)
{
    GroupParams P(3, 3);
    EXPECT_EQ(one(P, 0).coeffs(), IntVec{1});
    EXPECT_THROW(one(P, 4), LevelError);
    EXPECT_THROW(zero(P, 4), LevelError);
    std::mt19937_64 rng(2);
    for (unsigned k = 0; k <= 3; ++k) {
        Element a = random_element(rng, P, k);
        EXPECT_EQ(mul(one(P, k), a), a);
        EXPECT_EQ(add(zero(P, k), a), a);
    }
}

TEST(RingCore, FCoordinates)
{
    GroupParams P(2, 3);
    FCoords c = to_f(X(P, 1, 0));
    EXPECT_EQ(c.m_top, 2);
    EXPECT_EQ(c.f, IntVec{1});
    FCoords u = to_f(one(P, 2));
    EXPECT_EQ(u.m_top, 1);
    EXPECT_EQ(u.f, (IntVec{0, 0}));
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        Element a = random_element(rng, P, random_level(rng, 3));
        EXPECT_EQ(from_f(P, to_f(a)), a);
    }
    // F_{l,i} itself has f = e_i, m_top = 0
    FCoords f = to_f(F(P, 3, 1));
    EXPECT_EQ(f.m_top, 0);
    EXPECT_EQ(f.f, (IntVec{0, 1, 0}));
}

TEST(RingCore, ResExamples)
{
    GroupParams P(2, 2);
    EXPECT_EQ(res(X(P, 2, 0), 1), scale(2, X(P, 1, 0)));
    EXPECT_EQ(res(X(P, 2, 2), 1), one(P, 1));
    std::mt19937_64 rng(4);
    Element a = random_element(rng, P, 2);
    EXPECT_EQ(res(a, 2), a);
    EXPECT_THROW(res(X(P, 1, 0), 2), LevelError);
}

TEST(RingCore, IndExamples)
{
    GroupParams P(2, 2);
    EXPECT_EQ(ind(X(P, 1, 0), 2), X(P, 2, 0));
    EXPECT_EQ(ind(C(P, 0, 5), 2), scale(5, X(P, 2, 0)));
    std::mt19937_64 rng(5);
    Element a = random_element(rng, P, 1);
    EXPECT_EQ(ind(a, 1), a);
    EXPECT_THROW(ind(X(P, 2, 0), 1), LevelError);
}

TEST(RingCore, JndExamples)
{
    GroupParams P(2, 2);
    EXPECT_EQ(jnd(C(P, 0, 3), 1), Element(P, 1, {3, 3}));
    EXPECT_EQ(jnd(C(P, 0, 2), 1), Element(P, 1, {1, 2}));
    for (unsigned k = 0; k <= 2; ++k)
        for (unsigned l = k; l <= 2; ++l) {
            EXPECT_EQ(jnd(one(P, k), l), one(P, l));
            EXPECT_TRUE(jnd(zero(P, k), l).is_zero());
        }
    EXPECT_THROW(jnd(X(P, 2, 0), 1), LevelError);
    EXPECT_EQ(jnd(X(P, 1, 0), 1), X(P, 1, 0));
}

TEST(RingCore, JndNegativeAndLarge)
{
    // Norms of negative inputs go through the same closed form.
    GroupParams P(3, 4);
    EXPECT_EQ(jnd(C(P, 0, -1), 1), C(P, 1, -1));
    Element big = jnd(C(P, 0, 9), 4);
    // top coefficient stays m_k; total cardinality is 9^{81}
    EXPECT_EQ(big[4], 9);
    Int card = 0;
    for (unsigned i = 0; i <= 4; ++i)
        card += big[i] * P.pow(4 - i);
    EXPECT_EQ(card, ipow(Int(9), 81));
}

TEST(RingCore, Rendering)
{
    GroupParams P(2, 2);
    EXPECT_EQ(to_string(Element(P, 2, {3, -1, 5})), "3*X[2,0] - X[2,1] + 5");
    EXPECT_EQ(to_string(zero(P, 2)), "0");
    EXPECT_EQ(to_string(Element(P, 2, {-1, 0, 0})), "-X[2,0]");
    EXPECT_EQ(to_string(Element(P, 1, {0, -7})), "-7");
}

// ---------------------------------------------------------------------------
// Structural identities.

class RingLaws : public ::testing::TestWithParam<unsigned long> {};

TEST_P(RingLaws, CommutativeRing)
{
    GroupParams P(GetParam(), 4);
    std::mt19937_64 rng(10 + GetParam());
    for (int t = 0; t < 150; ++t) {
        const unsigned k = random_level(rng, 4);
        Element a = random_element(rng, P, k), b = random_element(rng, P, k),
                c = random_element(rng, P, k);
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
    }
}

TEST_P(RingLaws, StructureMaps)
{
    const unsigned long p = GetParam();
    GroupParams P(p, 4);
    std::mt19937_64 rng(20 + p);
    for (int t = 0; t < 150; ++t) {
        const unsigned k = random_level(rng, 3);
        const unsigned l = k + 1 + random_level(rng, 3 - k);
        Element a = random_element(rng, P, l), b = random_element(rng, P, l);
        ASSERT_EQ(res(a * b, k), res(a, k) * res(b, k));
        ASSERT_EQ(res(one(P, l), k), one(P, k));
        Element u = random_element(rng, P, k), v = random_element(rng, P, k);
        ASSERT_EQ(ind(u + v, l), ind(u, l) + ind(v, l));
        ASSERT_EQ(jnd(u * v, l), jnd(u, l) * jnd(v, l));
        // one level apart: res o ind = p, res o jnd = p-th power
        ASSERT_EQ(res(ind(u, k + 1), k), scale(Int(p), u));
        ASSERT_EQ(res(jnd(u, k + 1), k), power(u, p));
        // composition through an intermediate level
        const unsigned m = k + random_level(rng, l - k);
        ASSERT_EQ(res(a, k), res(res(a, m), k));
        ASSERT_EQ(ind(u, l), ind(ind(u, m), l));
        ASSERT_EQ(jnd(u, l), jnd(jnd(u, m), l));
    }
}

TEST_P(RingLaws, AdjacentJndIteratesToClosedForm)
{
    const unsigned long p = GetParam();
    GroupParams P(p, 4);
    std::mt19937_64 rng(30 + p);
    for (int t = 0; t < 60; ++t) {
        const unsigned k = random_level(rng, 3);
        Element u = random_element(rng, P, k);
        Element step = u;
        for (unsigned l = k + 1; l <= 4; ++l) {
            step = jnd(step, l);
            ASSERT_EQ(step, jnd(u, l)) << "k=" << k << " l=" << l;
        }
    }
}

TEST_P(RingLaws, FBasisIdentities)
{
    const unsigned long p = GetParam();
    GroupParams P(p, 4);
    for (unsigned l = 0; l <= 4; ++l) {
        // X_{l,j} F_{l,i} = p^{l-j} F_{l,i} - p^{l-i} F_{l,j} (i <= j), 0 (j <= i)
        for (unsigned i = 0; i <= l; ++i)
            for (unsigned j = 0; j <= l; ++j) {
                Element lhs = X(P, l, j) * F(P, l, i);
                Element rhs = i < j ? scale(P.pow(l - j), F(P, l, i)) -
                                          scale(P.pow(l - i), F(P, l, j))
                                    : zero(P, l);
                ASSERT_EQ(lhs, rhs) << "l=" << l << " i=" << i << " j=" << j;
            }
        // res^l_k(F_{l,i}) = p^{l-k} F_{k,i} (i <= k), 0 (k <= i)
        for (unsigned k = 0; k <= l; ++k)
            for (unsigned i = 0; i <= l; ++i) {
                Element expect = i < k ? scale(P.pow(l - k), F(P, k, i)) : zero(P, k);
                ASSERT_EQ(res(F(P, l, i), k), expect);
            }
        if (l >= 2) {
            for (unsigned i = 0; i + 1 < l; ++i)
                ASSERT_EQ(ind(F(P, l - 1, i), l) + scale(P.pow(l - i - 1), F(P, l, l - 1)),
                          F(P, l, i));
            Int coef = exact_div(ipow(-Int(p), p), Int(p * p), "test");
            ASSERT_EQ(jnd(F(P, l - 1, l - 2), l) + scale(coef, ind(F(P, l - 1, l - 2), l)),
                      F(P, l, l - 1));
        }
    }
}

TEST_P(RingLaws, AdjacentNormConstantTerm)
{
    // In F-coordinates the unit coefficient of jnd^l_{l-1}(a) is the p-th power of that of a.
    const unsigned long p = GetParam();
    GroupParams P(p, 4);
    std::mt19937_64 rng(40 + p);
    for (int t = 0; t < 100; ++t) {
        const unsigned l = 1 + random_level(rng, 3);
        Element a = random_element(rng, P, l - 1);
        ASSERT_EQ(to_f(jnd(a, l)).m_top, ipow(to_f(a).m_top, p));
    }
}

TEST_P(RingLaws, NormsOfIntegers)
{
    const unsigned long p = GetParam();
    GroupParams P(p, 4);
    for (unsigned l = 1; l <= 4; ++l)
        for (long n = -12; n <= 12; ++n) {
            Element N = C(P, l - 1, n);
            if (n % static_cast<long>(p) != 0) {
                Int c = exact_div(ipow(Int(n), p - 1) - 1, Int(p), "test");
                ASSERT_EQ(jnd(N, l) - scale(c, ind(N, l)), C(P, l, n));
            } else {
                Element u = C(P, l - 1, n / static_cast<long>(p));
                ASSERT_EQ(ind(u, l) - scale(Int(n / static_cast<long>(p)), F(P, l, l - 1)),
                          C(P, l, n));
            }
        }
}

TEST_P(RingLaws, NormOfSumExpansion)
{
    // jnd(a+b) = jnd(a) + jnd(b) + sum_{0<j<p} (C(p,j)/p) ind(a^j b^{p-j}), one level apart
    const unsigned long p = GetParam();
    GroupParams P(p, 4);
    std::mt19937_64 rng(50 + p);
    for (int t = 0; t < 150; ++t) {
        const unsigned k = random_level(rng, 3);
        Element a = random_element(rng, P, k), b = random_element(rng, P, k);
        Element rhs = jnd(a, k + 1) + jnd(b, k + 1);
        Int binom = 1;
        for (unsigned long j = 1; j < p; ++j) {
            binom = binom * Int(p - j + 1) / Int(j);
            rhs = rhs + scale(exact_div(binom, Int(p), "binomial"),
                              ind(power(a, j) * power(b, p - j), k + 1));
        }
        ASSERT_EQ(jnd(a + b, k + 1), rhs);
    }
}

INSTANTIATE_TEST_SUITE_P(Primes, RingLaws, ::testing::Values(2UL, 3UL, 5UL));

TEST(RingCore, RejectsCompositeP)
{
    EXPECT_THROW(GroupParams(4, 1), BadParams);
    EXPECT_THROW(GroupParams(1, 1), BadParams);
}
