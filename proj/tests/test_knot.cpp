#include <gtest/gtest.h>

#include <cstdint>
#include <limits>
#include <vector>

#include "ttc/knot.hpp"

using namespace ttc;

namespace {

// Every valid knot with both windings in [-n, n].
std::vector<TorusKnot> knots_up_to(Int n) {
    std::vector<TorusKnot> ks;
    for (Int p = -n; p <= n; ++p)
        for (Int q = -n; q <= n; ++q)
            if (gcd_abs(p, q) == 1) ks.push_back(TorusKnot(p, q));
    return ks;
}

} // namespace

TEST(TorusKnotTest, RejectsNonCoprimeWindings) {
    EXPECT_THROW(TorusKnot(2, 4), InvalidInput);
    EXPECT_THROW(TorusKnot(0, 0), InvalidInput);
    EXPECT_THROW(TorusKnot(0, -3), InvalidInput);
    EXPECT_THROW(TorusKnot(-6, 9), InvalidInput);
    EXPECT_NO_THROW(TorusKnot(0, 1));
    EXPECT_NO_THROW(TorusKnot(1, 0));
    EXPECT_NO_THROW(TorusKnot(-3, 5));
}

TEST(TorusKnotTest, TrivialityDependsOnTheSmallWinding) {
    EXPECT_TRUE(is_trivial(TorusKnot(0, 1)));
    EXPECT_TRUE(is_trivial(TorusKnot(1, 9)));
    EXPECT_TRUE(is_trivial(TorusKnot(-1, 7)));
    EXPECT_TRUE(is_trivial(TorusKnot(5, -1)));
    EXPECT_FALSE(is_trivial(TorusKnot(2, 3)));
    EXPECT_FALSE(is_trivial(TorusKnot(-3, -5)));
    EXPECT_FALSE(is_trivial(TorusKnot(3, -5)));
}

TEST(TorusKnotTest, PrimeExactlyWhenNontrivial) {
    for (const TorusKnot& k : knots_up_to(8))
        EXPECT_NE(is_prime_knot(k), is_trivial(k));
}

TEST(IntersectionNumberTest, PairsTheBasisToOne) {
    EXPECT_EQ(intersection_number({1, 0}, {0, 1}), 1);
    EXPECT_EQ(intersection_number({0, 1}, {1, 0}), -1);
    EXPECT_EQ(intersection_number({3, 5}, {-2, -3}), 1);
}

TEST(IntersectionNumberTest, IsBilinearAndAntisymmetric) {
    for (Int a = -4; a <= 4; ++a)
        for (Int b = -4; b <= 4; ++b)
            for (Int c = -4; c <= 4; ++c)
                for (Int d = -4; d <= 4; ++d) {
                    const HomologyClass x{a, b}, y{c, d};
                    EXPECT_EQ(intersection_number(x, y), -intersection_number(y, x));
                    EXPECT_EQ(intersection_number(x + y, x),
                              intersection_number(y, x));
                    EXPECT_EQ(intersection_number(x, x), 0);
                }
}

TEST(SymmetryTest, ActsOnTheWindings) {
    const TorusKnot k(3, 5);
    EXPECT_EQ(reverse(k), TorusKnot(-3, -5));
    EXPECT_EQ(reflect_R(k), TorusKnot(3, -5));
    EXPECT_EQ(rotate_sigma(k), TorusKnot(5, 3));
    EXPECT_EQ(rotate_rho(k), TorusKnot(-3, -5));
}

TEST(SymmetryTest, InvolutionsComposeAsExpected) {
    for (const TorusKnot& k : knots_up_to(6)) {
        EXPECT_EQ(reverse(reverse(k)), k);
        EXPECT_EQ(reflect_R(reflect_R(k)), k);
        EXPECT_EQ(rotate_sigma(rotate_sigma(k)), k);
        EXPECT_EQ(rotate_rho(rotate_rho(k)), k);
        EXPECT_EQ(rotate_rho(reflect_R(k)), reflect_R(rotate_rho(k)));
    }
}

TEST(KnotEquivalenceTest, MatchesTheSymmetryOrbits) {
    const TorusKnot k(3, 5);
    EXPECT_TRUE(knots_equivalent(k, TorusKnot(5, 3), KnotEquivalence::Isotopy));
    EXPECT_TRUE(knots_equivalent(k, TorusKnot(-3, -5), KnotEquivalence::Isotopy));
    EXPECT_FALSE(knots_equivalent(k, TorusKnot(3, -5), KnotEquivalence::Isotopy));
    EXPECT_TRUE(knots_equivalent(k, TorusKnot(3, -5), KnotEquivalence::Homeomorphism));
    EXPECT_TRUE(knots_equivalent(k, TorusKnot(-3, 5), KnotEquivalence::Homeomorphism));
    EXPECT_FALSE(knots_equivalent(k, TorusKnot(2, 3), KnotEquivalence::Homeomorphism));
}

TEST(KnotEquivalenceTest, AllTrivialKnotsAgree) {
    EXPECT_TRUE(knots_equivalent(TorusKnot(0, 1), TorusKnot(1, 9),
                                 KnotEquivalence::Isotopy));
    EXPECT_TRUE(knots_equivalent(TorusKnot(1, 0), TorusKnot(-1, 4),
                                 KnotEquivalence::Isotopy));
    EXPECT_FALSE(knots_equivalent(TorusKnot(1, 9), TorusKnot(2, 3),
                                  KnotEquivalence::Homeomorphism));
}

TEST(KnotEquivalenceTest, IsAnEquivalenceRelation) {
    const std::vector<TorusKnot> ks = knots_up_to(8);
    for (const KnotEquivalence rel :
         {KnotEquivalence::Isotopy, KnotEquivalence::Homeomorphism}) {
        const size_t n = ks.size();
        std::vector<std::vector<bool>> eq(n, std::vector<bool>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                eq[i][j] = knots_equivalent(ks[i], ks[j], rel);
        for (size_t i = 0; i < n; ++i) {
            ASSERT_TRUE(eq[i][i]);
            for (size_t j = 0; j < n; ++j) ASSERT_EQ(eq[i][j], eq[j][i]);
        }
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                if (!eq[i][j]) continue;
                for (size_t k = 0; k < n; ++k)
                    if (eq[j][k]) ASSERT_TRUE(eq[i][k]);
            }
    }
}

TEST(KnotEquivalenceTest, IsotopyRefinesHomeomorphism) {
    const std::vector<TorusKnot> ks = knots_up_to(8);
    for (const TorusKnot& a : ks)
        for (const TorusKnot& b : ks)
            if (knots_equivalent(a, b, KnotEquivalence::Isotopy))
                EXPECT_TRUE(knots_equivalent(a, b, KnotEquivalence::Homeomorphism));
}

TEST(CanonicalFormTest, NormalizesTheDocumentedExamples) {
    EXPECT_EQ(canonical_unoriented(TorusKnot(-5, -3), KnotEquivalence::Homeomorphism),
              TorusKnot(3, 5));
    EXPECT_EQ(canonical_unoriented(TorusKnot(5, 3), KnotEquivalence::Isotopy),
              TorusKnot(3, 5));
    EXPECT_EQ(canonical_unoriented(TorusKnot(3, -5), KnotEquivalence::Isotopy),
              TorusKnot(3, -5));
    EXPECT_EQ(canonical_unoriented(TorusKnot(-3, 5), KnotEquivalence::Isotopy),
              TorusKnot(3, -5));
    EXPECT_EQ(canonical_unoriented(TorusKnot(-3, 5), KnotEquivalence::Homeomorphism),
              TorusKnot(3, 5));
    EXPECT_EQ(canonical_unoriented(TorusKnot(1, 9), KnotEquivalence::Isotopy),
              TorusKnot(0, 1));
}

TEST(CanonicalFormTest, IsIdempotentAndSeparatesClasses) {
    const std::vector<TorusKnot> ks = knots_up_to(12);
    for (const KnotEquivalence rel :
         {KnotEquivalence::Isotopy, KnotEquivalence::Homeomorphism}) {
        for (const TorusKnot& k : ks) {
            const TorusKnot c = canonical_unoriented(k, rel);
            EXPECT_EQ(canonical_unoriented(c, rel), c);
            EXPECT_TRUE(knots_equivalent(k, c, rel));
        }
        for (const TorusKnot& a : ks)
            for (const TorusKnot& b : ks)
                ASSERT_EQ(canonical_unoriented(a, rel) == canonical_unoriented(b, rel),
                          knots_equivalent(a, b, rel));
    }
}

TEST(UnorientedRepTest, FlipsTheLeadingSign) {
    EXPECT_EQ(unoriented_rep(TorusKnot(-3, 5)), TorusKnot(3, -5));
    EXPECT_EQ(unoriented_rep(TorusKnot(-2, -3)), TorusKnot(2, 3));
    EXPECT_EQ(unoriented_rep(TorusKnot(0, -1)), TorusKnot(0, 1));
    for (const TorusKnot& k : knots_up_to(6)) {
        const TorusKnot r = unoriented_rep(k);
        EXPECT_EQ(unoriented_rep(r), r);
        EXPECT_TRUE(r == k || r == reverse(k));
    }
}

TEST(CheckedArithmeticTest, OverflowIsAnErrorNotWraparound) {
    const Int big = std::numeric_limits<Int>::max();
    EXPECT_THROW(checked_add(big, 1), OverflowError);
    EXPECT_THROW(checked_mul(big, 2), OverflowError);
    EXPECT_THROW(checked_neg(std::numeric_limits<Int>::min()), OverflowError);
    EXPECT_THROW(TorusKnot(std::numeric_limits<Int>::min(), 1), OverflowError);
    EXPECT_THROW(intersection_number({big, 1}, {1, 2}), OverflowError);
    EXPECT_EQ(checked_add(big - 1, 1), big);
}
