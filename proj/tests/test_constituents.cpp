#include <gtest/gtest.h>

#include <array>
#include <numeric>

#include "ttc/constituents.hpp"

using namespace ttc;

TEST(ModInverseTest, MatchesKnownValues) {
    EXPECT_EQ(mod_inverse(5, 3), 2);
    EXPECT_EQ(mod_inverse(1, 7), 1);
    EXPECT_EQ(mod_inverse(-3, 5), 3);
    EXPECT_THROW(mod_inverse(2, 4), NotInvertible);
    EXPECT_THROW(mod_inverse(3, 1), InvalidInput);
    EXPECT_THROW(mod_inverse(3, 0), InvalidInput);
    EXPECT_THROW(mod_inverse(3, -5), InvalidInput);
}

TEST(ModInverseTest, InvertsAndMirrorsAcrossTheModulus) {
    for (Int n = 2; n <= 40; ++n)
        for (Int x = 1; x < n; ++x) {
            if (std::gcd(x, n) != 1) continue;
            const Int inv = mod_inverse(x, n);
            ASSERT_GE(inv, 1);
            ASSERT_LE(inv, n - 1);
            EXPECT_EQ(inv * x % n, 1);
            EXPECT_EQ(mod_inverse(-x, n), n - inv);
        }
}

TEST(JkPairTest, MatchesKnownValues) {
    EXPECT_EQ(jk_pair(3, 5), (JKPair{2, 3}));
    EXPECT_EQ(jk_pair(2, 3), (JKPair{1, 1}));
    EXPECT_EQ(jk_pair(5, 8), (JKPair{2, 3}));
    EXPECT_EQ(jk_pair(8, 13), (JKPair{5, 8}));
    EXPECT_EQ(jk_pair(13, 21), (JKPair{5, 8}));
    EXPECT_EQ(jk_pair(7, 8), (JKPair{1, 1}));
    EXPECT_EQ(jk_pair(2, 5), (JKPair{1, 2}));
}

TEST(JkPairTest, SatisfiesTheDefiningIdentityInRange) {
    for (Int q = 3; q <= 60; ++q)
        for (Int p = 2; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            const auto [j, k] = jk_pair(p, q);
            ASSERT_GE(j, 1);
            ASSERT_LE(j, p - 1);
            ASSERT_GE(k, 1);
            ASSERT_LE(k, q - 1);
            ASSERT_EQ(j * q - k * p, 1);
        }
}

TEST(JkPairTest, RejectsDegenerateInputs) {
    EXPECT_THROW(jk_pair(1, 5), InvalidInput);
    EXPECT_THROW(jk_pair(5, 1), InvalidInput);
    EXPECT_THROW(jk_pair(4, 6), InvalidInput);
    EXPECT_THROW(jk_pair(-3, 5), InvalidInput);
}

TEST(ConstituentsTest, MatchesTheTableForTheta35) {
    const ConstituentTriple t = constituents_pq(3, 5);
    EXPECT_EQ(t.k3(), TorusKnot(3, 5));
    EXPECT_EQ(t.k2(), TorusKnot(-2, -3));
    EXPECT_EQ(t.k1(), TorusKnot(-1, -2));
}

TEST(ConstituentsTest, MatchesTheTableForTheta1321) {
    const ConstituentTriple t = constituents_pq(13, 21);
    EXPECT_EQ(t.k3(), TorusKnot(13, 21));
    EXPECT_EQ(t.k2(), TorusKnot(-5, -8));
    EXPECT_EQ(t.k1(), TorusKnot(-8, -13));
}

TEST(ConstituentsTest, UnorientedSetForTheta78) {
    const auto s = unoriented_set(constituents_pq(7, 8));
    EXPECT_EQ(s, (std::array<TorusKnot, 3>{TorusKnot(1, 1), TorusKnot(6, 7),
                                           TorusKnot(7, 8)}));
}

TEST(ConstituentsTest, ClassesCloseUpAndMeetInOne) {
    for (Int q = 3; q <= 25; ++q)
        for (Int p = 2; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            for (Int r = -3; r <= 3; ++r) {
                const ConstituentTriple t = constituents_pqr(ThetaPQR(p, q, r));
                const HomologyClass c1 = t.k1().homology();
                const HomologyClass c2 = t.k2().homology();
                const HomologyClass c3 = t.k3().homology();
                ASSERT_TRUE(((c1 + c2) + c3).is_zero());
                ASSERT_EQ(intersection_number(c3, c2), 1);
                ASSERT_EQ(intersection_number(c2, c1), 1);
                ASSERT_EQ(intersection_number(c1, c3), 1);
            }
        }
}

TEST(ConstituentTripleTest, RejectsInconsistentKnots) {
    // classes sum to (0,1)
    EXPECT_THROW(ConstituentTriple(TorusKnot(1, 2), TorusKnot(2, 3), TorusKnot(-3, -4)),
                 InvalidInput);
    // sums to zero but I(k1,k2) = -5
    EXPECT_THROW(ConstituentTriple(TorusKnot(1, 3), TorusKnot(3, 4), TorusKnot(-4, -7)),
                 InvalidInput);
    EXPECT_NO_THROW(ConstituentTriple(TorusKnot(-1, -2), TorusKnot(-2, -3),
                                      TorusKnot(3, 5)));
}

TEST(ThetaPQRTest, ValidatesWindingsOnly) {
    EXPECT_NO_THROW(ThetaPQR(2, 3, -100));
    EXPECT_NO_THROW(ThetaPQR(5, 2, 0)); // p > q is allowed
    EXPECT_THROW(ThetaPQR(3, -5, 0), InvalidInput);
    EXPECT_THROW(ThetaPQR(1, 5, 0), InvalidInput);
    EXPECT_THROW(ThetaPQR(4, 6, 0), InvalidInput);
}

TEST(ConstituentsPqrTest, ReducesToThePlainFormAtZeroWinding) {
    for (Int q = 3; q <= 20; ++q)
        for (Int p = 2; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            EXPECT_EQ(constituents_pqr(ThetaPQR(p, q, 0)), constituents_pq(p, q));
        }
}

TEST(ConstituentsPqrTest, MatchesHandComputedWindings) {
    const ConstituentTriple a = constituents_pqr(ThetaPQR(2, 3, 1));
    EXPECT_EQ(a.k3(), TorusKnot(2, 3));
    EXPECT_EQ(a.k2(), TorusKnot(1, 2));
    EXPECT_EQ(a.k1(), TorusKnot(-3, -5));

    const ConstituentTriple b = constituents_pqr(ThetaPQR(2, 3, -1));
    EXPECT_EQ(b.k2(), TorusKnot(-3, -4));
    EXPECT_EQ(b.k1(), TorusKnot(1, 1));

    const ConstituentTriple c = constituents_pqr(ThetaPQR(2, 3, 2));
    EXPECT_EQ(c.k2(), TorusKnot(3, 5));
    EXPECT_EQ(c.k1(), TorusKnot(-5, -8));
}

TEST(ConstituentsPqrTest, AcceptsSwappedWindings) {
    const ConstituentTriple t = constituents_pqr(ThetaPQR(5, 2, 0));
    EXPECT_EQ(t.k3(), TorusKnot(5, 2));
    const HomologyClass sum =
        (t.k1().homology() + t.k2().homology()) + t.k3().homology();
    EXPECT_TRUE(sum.is_zero());
}

TEST(SignVariantTest, ProducesTheFourDocumentedSets) {
    using V = ThetaSignVariant;
    EXPECT_EQ(constituents_sign_variant(3, 5, V::PP),
              (std::array<TorusKnot, 3>{TorusKnot(1, 2), TorusKnot(2, 3),
                                        TorusKnot(3, 5)}));
    EXPECT_EQ(constituents_sign_variant(3, 5, V::PN),
              (std::array<TorusKnot, 3>{TorusKnot(1, -2), TorusKnot(2, -3),
                                        TorusKnot(3, -5)}));
    EXPECT_EQ(constituents_sign_variant(3, 5, V::NN),
              (std::array<TorusKnot, 3>{TorusKnot(-3, -5), TorusKnot(-2, -3),
                                        TorusKnot(-1, -2)}));
    EXPECT_EQ(constituents_sign_variant(3, 5, V::NP),
              (std::array<TorusKnot, 3>{TorusKnot(-3, 5), TorusKnot(-2, 3),
                                        TorusKnot(-1, 2)}));
}

TEST(SignVariantTest, PPEqualsTheUnorientedSet) {
    using V = ThetaSignVariant;
    for (const auto& [p, q] : {std::pair<Int, Int>{3, 5}, {5, 8}, {2, 7}, {4, 9}}) {
        EXPECT_EQ(constituents_sign_variant(p, q, V::PP),
                  unoriented_set(constituents_pq(p, q)));
    }
}

TEST(SignVariantTest, CoheresWithTheSymmetryActions) {
    using V = ThetaSignVariant;
    const auto apply_sorted = [](std::array<TorusKnot, 3> s, auto&& f) {
        for (TorusKnot& k : s) k = f(k);
        std::sort(s.begin(), s.end());
        return s;
    };
    for (Int q = 3; q <= 15; ++q)
        for (Int p = 2; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            const auto pp = constituents_sign_variant(p, q, V::PP);
            EXPECT_EQ(constituents_sign_variant(p, q, V::PN),
                      apply_sorted(pp, [](const TorusKnot& k) { return reflect_R(k); }));
            EXPECT_EQ(constituents_sign_variant(p, q, V::NN),
                      apply_sorted(pp, [](const TorusKnot& k) { return rotate_rho(k); }));
            EXPECT_EQ(constituents_sign_variant(p, q, V::NP),
                      apply_sorted(pp, [](const TorusKnot& k) {
                          return rotate_rho(reflect_R(k));
                      }));
        }
}

TEST(TrivialFamilyTest, MatchesTheClosedForm) {
    const ConstituentTriple a = constituents_1q(3, 0);
    EXPECT_EQ(a.k3(), TorusKnot(1, 3));
    EXPECT_EQ(a.k2(), TorusKnot(-1, -2));
    EXPECT_EQ(a.k1(), TorusKnot(0, -1));

    const ConstituentTriple b = constituents_1q(1, -1);
    EXPECT_EQ(b.k3(), TorusKnot(1, 1));
    EXPECT_EQ(b.k2(), TorusKnot(-2, -1));
    EXPECT_EQ(b.k1(), TorusKnot(1, 0));

    const ConstituentTriple c = constituents_1q(2, 2);
    EXPECT_EQ(c.k3(), TorusKnot(1, 2));
    EXPECT_EQ(c.k2(), TorusKnot(1, 3));
    EXPECT_EQ(c.k1(), TorusKnot(-2, -5));

    EXPECT_THROW(constituents_1q(0, 1), InvalidInput);
}

TEST(TrivialFamilyTest, KnotConstituentIsAlwaysTrivialAndClassesClose) {
    for (Int q = 1; q <= 12; ++q)
        for (Int r = -4; r <= 4; ++r) {
            const ConstituentTriple t = constituents_1q(q, r);
            EXPECT_TRUE(is_trivial(t.k3()));
            const HomologyClass sum =
                (t.k1().homology() + t.k2().homology()) + t.k3().homology();
            EXPECT_TRUE(sum.is_zero());
        }
}

TEST(ConstituentsTest, ThetaTwoFamilyHasExactlyTwoTrivialConstituents) {
    for (Int q = 3; q <= 21; q += 2) {
        const ConstituentTriple t = constituents_pq(2, q);
        EXPECT_TRUE(is_trivial(t.k1()));
        EXPECT_TRUE(is_trivial(t.k2()));
        EXPECT_FALSE(is_trivial(t.k3()));
    }
}

TEST(ConstituentsTest, RejectsInvalidWindings) {
    EXPECT_THROW(constituents_pq(2, 4), InvalidInput);
    EXPECT_THROW(constituents_pq(1, 5), InvalidInput);
}
