// Classification of torus theta-curves from their constituent homology
// classes, plus the equivalence tests on theta(p,q) parameter pairs.
//
// A theta-curve on T is ingested as the triple (c1,c2,c3) of constituent
// classes in the [l,m] basis; that data determines the classification. The
// trichotomy: either every constituent is unknotted (the theta-curve is
// unknotted), or some constituent class vanishes (the curve is a 2-connected
// sum of the trivial theta-curve with the knot the other two classes name),
// or the curve is prime and isotopic on T to a standard theta(P,Q) read off
// the class of largest coordinate sum.
#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <variant>

#include "ttc/checked.hpp"
#include "ttc/constituents.hpp"
#include "ttc/errors.hpp"
#include "ttc/knot.hpp"

namespace ttc {

// Validated triple of constituent classes. The constructor is the admission
// gate: classes must sum to zero, each must be zero or primitive, and when
// all three are nonzero every pair must meet algebraically in +-1 (the
// determinant identity j*q - k*p = 1 in disguise). Triples failing the last
// rule cannot arise from a theta-curve embedded in T.
class ThetaOnTorus {
public:
    ThetaOnTorus(HomologyClass c1, HomologyClass c2, HomologyClass c3)
        : c_{c1, c2, c3} {
        if (!((c1 + c2) + c3).is_zero())
            throw SumNotZero("constituent classes must sum to (0,0)");
        for (const auto& c : c_) {
            if (!is_primitive_or_zero(c))
                throw NonPrimitiveClass("class (" + std::to_string(c.a) + "," +
                                        std::to_string(c.b) +
                                        ") is neither zero nor primitive");
        }
        const bool all_nonzero = !c1.is_zero() && !c2.is_zero() && !c3.is_zero();
        if (all_nonzero) {
            for (const Int d : {intersection_number(c1, c2), intersection_number(c2, c3),
                                intersection_number(c3, c1)}) {
                if (d != 1 && d != -1)
                    throw NotRealizable("pairwise intersection numbers must be +-1, got " +
                                        std::to_string(d));
            }
        }
    }

    HomologyClass c1() const { return c_[0]; }
    HomologyClass c2() const { return c_[1]; }
    HomologyClass c3() const { return c_[2]; }
    const std::array<HomologyClass, 3>& classes() const { return c_; }

    friend bool operator==(const ThetaOnTorus&, const ThetaOnTorus&) = default;

private:
    std::array<HomologyClass, 3> c_;
};

enum class SignPattern { SameSigns, OppositeSigns };

struct Unknotted {
    friend bool operator==(const Unknotted&, const Unknotted&) = default;
};

struct ConnectedSum {
    TorusKnot knot; // isotopy-canonical unoriented representative

    friend bool operator==(const ConnectedSum&, const ConnectedSum&) = default;
};

struct PrimeTheta {
    Int p;
    Int q; // 2 <= p < q, coprime
    SignPattern signs;

    friend bool operator==(const PrimeTheta&, const PrimeTheta&) = default;
};

using ThetaClassification = std::variant<Unknotted, ConnectedSum, PrimeTheta>;

namespace detail {

// Unknotted in S^3: the zero class, or a class with a coordinate in
// {0, 1, -1}.
inline bool class_is_unknot(HomologyClass c) {
    if (c.is_zero()) return true;
    return std::min(checked_abs(c.a), checked_abs(c.b)) <= 1;
}

} // namespace detail

inline ThetaClassification classify_theta(const ThetaOnTorus& t) {
    const auto& cs = t.classes();

    const bool all_unknotted =
        std::all_of(cs.begin(), cs.end(), detail::class_is_unknot);
    if (all_unknotted) return Unknotted{};

    for (const auto& c : cs) {
        if (c.is_zero()) {
            // The other two classes are negatives of each other and name the
            // knot tied into one edge of the trivial theta-curve.
            for (const auto& d : cs) {
                if (!d.is_zero())
                    return ConnectedSum{canonical_unoriented(TorusKnot(d.a, d.b),
                                                             KnotEquivalence::Isotopy)};
            }
        }
    }

    // Prime case: the class of strictly largest |a|+|b| is unique and names
    // the standard form theta(P,Q).
    int best = -1;
    Int best_sum = -1;
    bool tie = false;
    for (int i = 0; i < 3; ++i) {
        const Int s = checked_add(checked_abs(cs[i].a), checked_abs(cs[i].b));
        if (s > best_sum) {
            best_sum = s;
            best = i;
            tie = false;
        } else if (s == best_sum) {
            tie = true;
        }
    }
    if (tie)
        throw std::logic_error("classify_theta: coordinate-sum maximizer not unique");
    const HomologyClass c = cs[static_cast<size_t>(best)];
    const Int P = std::min(checked_abs(c.a), checked_abs(c.b));
    const Int Q = std::max(checked_abs(c.a), checked_abs(c.b));
    if (P < 2 || P == Q)
        throw std::logic_error("classify_theta: maximizing class is not a knotted pair");
    const SignPattern signs = ((c.a > 0) == (c.b > 0)) ? SignPattern::SameSigns
                                                       : SignPattern::OppositeSigns;
    return PrimeTheta{P, Q, signs};
}

/// Classification of theta(p,q,r) through its closed-form constituents.
/// Always lands in the Prime case; r = 0 gives Prime(min(p,q), max(p,q)).
inline ThetaClassification classify_pqr(const ThetaPQR& t) {
    const ConstituentTriple c = constituents_pqr(t);
    const ThetaOnTorus theta(c.k1().homology(), c.k2().homology(), c.k3().homology());
    return classify_theta(theta);
}

struct ThetaEquivalenceVerdict {
    bool isotopic = false;
    bool homeomorphic = false;

    friend bool operator==(const ThetaEquivalenceVerdict&,
                           const ThetaEquivalenceVerdict&) = default;
};

/// Equivalence of theta(p,q) and theta(p',q') for coprime pairs with
/// |p|,|q| >= 2: homeomorphic iff {p',q'} matches {p,q} up to swapping and
/// any sign changes, isotopic iff additionally the sign-agreement parity is
/// preserved (both-same or both-mixed).
inline ThetaEquivalenceVerdict theta_equivalent(Int p1, Int q1, Int p2, Int q2) {
    const auto check = [](Int p, Int q) {
        if (checked_abs(p) < 2 || checked_abs(q) < 2 || gcd_abs(p, q) != 1)
            throw InvalidInput("theta_equivalent requires coprime |p|,|q| >= 2, got (" +
                               std::to_string(p) + "," + std::to_string(q) + ")");
    };
    check(p1, q1);
    check(p2, q2);
    const Int a1 = std::min(checked_abs(p1), checked_abs(q1));
    const Int b1 = std::max(checked_abs(p1), checked_abs(q1));
    const Int a2 = std::min(checked_abs(p2), checked_abs(q2));
    const Int b2 = std::max(checked_abs(p2), checked_abs(q2));
    const bool homeo = (a1 == a2) && (b1 == b2);
    const bool parity1 = (p1 > 0) == (q1 > 0);
    const bool parity2 = (p2 > 0) == (q2 > 0);
    return {homeo && parity1 == parity2, homeo};
}

inline bool is_prime_theta(const ThetaClassification& c) {
    return std::holds_alternative<PrimeTheta>(c);
}

/// A torus theta-curve is never a 3-connected sum of two knotted
/// theta-curves, so this predicate is constantly false on classifications of
/// validated triples. Provided so the negative fact is queryable.
inline bool is_three_connected_sum(const ThetaClassification&) {
    return false;
}

// Complete homeomorphism invariant. Two classifications compare equal here
// iff the underlying theta-curves are homeomorphic: the Prime pair forgets
// the sign pattern, the ConnectedSum knot is canonicalized under
// homeomorphism, and Unknotted is its own token.
struct HomeoInvariant {
    enum class Kind { Unknotted, ConnectedSum, Prime };

    Kind kind;
    Int a = 0;
    Int b = 0;

    friend bool operator==(const HomeoInvariant&, const HomeoInvariant&) = default;
};

inline HomeoInvariant homeo_invariant(const ThetaClassification& c) {
    if (std::holds_alternative<Unknotted>(c))
        return {HomeoInvariant::Kind::Unknotted, 0, 0};
    if (const auto* s = std::get_if<ConnectedSum>(&c)) {
        const TorusKnot k = canonical_unoriented(s->knot, KnotEquivalence::Homeomorphism);
        return {HomeoInvariant::Kind::ConnectedSum, k.p(), k.q()};
    }
    const auto& pr = std::get<PrimeTheta>(c);
    return {HomeoInvariant::Kind::Prime, pr.p, pr.q};
}

} // namespace ttc
