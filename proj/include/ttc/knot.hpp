// Torus knots t(p,q) and first-homology classes of curves on the standard
// torus T, with the symmetry actions and equivalence tests used everywhere
// else in the library.
//
// Conventions: H1(T) has ordered basis [l, m] (longitude, meridian), so a
// class is an integer pair (a, b) = a*l + b*m. t(p,q) wraps p times in the
// l direction and q times in the m direction; it is a knot exactly when
// gcd(|p|,|q|) = 1, and it is trivial (unknotted in S^3) exactly when p or q
// lies in {0, 1, -1}.
#pragma once

#include <algorithm>
#include <compare>
#include <string>

#include "ttc/checked.hpp"
#include "ttc/errors.hpp"

namespace ttc {

struct HomologyClass {
    Int a = 0; // coefficient of l
    Int b = 0; // coefficient of m

    friend bool operator==(const HomologyClass&, const HomologyClass&) = default;

    bool is_zero() const { return a == 0 && b == 0; }
};

inline HomologyClass operator+(HomologyClass x, HomologyClass y) {
    return {checked_add(x.a, y.a), checked_add(x.b, y.b)};
}

inline HomologyClass operator-(HomologyClass x, HomologyClass y) {
    return {checked_sub(x.a, y.a), checked_sub(x.b, y.b)};
}

inline HomologyClass operator-(HomologyClass x) {
    return {checked_neg(x.a), checked_neg(x.b)};
}

/// Algebraic intersection pairing on H1(T): the determinant
/// det [[a1, a2], [b1, b2]] = a1*b2 - a2*b1, so I(l,m) = 1.
inline Int intersection_number(HomologyClass c1, HomologyClass c2) {
    return checked_sub(checked_mul(c1.a, c2.b), checked_mul(c2.a, c1.b));
}

/// A nonzero class is realized by an embedded closed curve on T iff it is
/// primitive. Zero classes are inessential curves and count as realizable.
inline bool is_primitive_or_zero(HomologyClass c) {
    if (c.is_zero()) return true;
    return gcd_abs(c.a, c.b) == 1;
}

enum class KnotEquivalence {
    Isotopy,        // ambient isotopy of S^3
    Homeomorphism,  // possibly orientation-reversing homeomorphism of S^3
};

class TorusKnot {
public:
    TorusKnot(Int p, Int q) : p_(p), q_(q) {
        if (gcd_abs(p, q) != 1)
            throw InvalidInput("t(" + std::to_string(p) + "," + std::to_string(q) +
                               ") is not a torus knot: gcd(|p|,|q|) must be 1");
    }

    Int p() const { return p_; }
    Int q() const { return q_; }

    HomologyClass homology() const { return {p_, q_}; }

    friend bool operator==(const TorusKnot&, const TorusKnot&) = default;
    friend auto operator<=>(const TorusKnot&, const TorusKnot&) = default;

private:
    Int p_;
    Int q_;
};

inline bool is_trivial(const TorusKnot& k) {
    return checked_abs(k.p()) <= 1 || checked_abs(k.q()) <= 1;
}

// The unknot is not prime by convention, so this is simply the complement of
// is_trivial on valid knots.
inline bool is_prime_knot(const TorusKnot& k) {
    return !is_trivial(k);
}

/// Orientation reversal: -t(p,q) = t(-p,-q).
inline TorusKnot reverse(const TorusKnot& k) {
    return TorusKnot(checked_neg(k.p()), checked_neg(k.q()));
}

/// Mirror reflection R of S^3: t(p,q) -> t(p,-q).
inline TorusKnot reflect_R(const TorusKnot& k) {
    return TorusKnot(k.p(), checked_neg(k.q()));
}

/// Rotation sigma of S^3 swapping the roles of l and m: t(p,q) -> t(q,p).
inline TorusKnot rotate_sigma(const TorusKnot& k) {
    return TorusKnot(k.q(), k.p());
}

/// Rotation rho of S^3: t(p,q) -> t(-p,-q). Coincides with reverse on (p,q)
/// pairs; kept as a separate name because it is a different ambient motion.
inline TorusKnot rotate_rho(const TorusKnot& k) {
    return TorusKnot(checked_neg(k.p()), checked_neg(k.q()));
}

namespace detail {

inline bool unordered_pair_is(const TorusKnot& k, Int a, Int b) {
    return (k.p() == a && k.q() == b) || (k.p() == b && k.q() == a);
}

} // namespace detail

/// Equivalence of torus knots. Trivial knots are all equivalent to each
/// other and to nothing else. For nontrivial knots t(p,q), t(p',q'):
/// isotopic iff {p',q'} = {p,q} or {-p,-q}; homeomorphic additionally allows
/// {p,-q} and {-p,q}. Torus knots are invertible, so the oriented and
/// unoriented classifications coincide and this single test serves both.
inline bool knots_equivalent(const TorusKnot& k1, const TorusKnot& k2,
                             KnotEquivalence rel) {
    if (is_trivial(k1) || is_trivial(k2))
        return is_trivial(k1) && is_trivial(k2);
    const Int p = k1.p(), q = k1.q();
    const Int np = checked_neg(p), nq = checked_neg(q);
    if (detail::unordered_pair_is(k2, p, q) || detail::unordered_pair_is(k2, np, nq))
        return true;
    if (rel == KnotEquivalence::Homeomorphism)
        return detail::unordered_pair_is(k2, p, nq) ||
               detail::unordered_pair_is(k2, np, q);
    return false;
}

/// Canonical representative of the unoriented equivalence class of k.
/// Trivial knots map to t(0,1). Nontrivial, with P = min(|p|,|q|) and
/// Q = max(|p|,|q|): under Homeomorphism the form is t(P,Q); under Isotopy
/// it is t(P,Q) when p,q share a sign and t(P,-Q) otherwise. Idempotent,
/// and two knots share a canonical form iff knots_equivalent says so.
inline TorusKnot canonical_unoriented(const TorusKnot& k, KnotEquivalence rel) {
    if (is_trivial(k)) return TorusKnot(0, 1);
    const Int P = std::min(checked_abs(k.p()), checked_abs(k.q()));
    const Int Q = std::max(checked_abs(k.p()), checked_abs(k.q()));
    if (rel == KnotEquivalence::Homeomorphism) return TorusKnot(P, Q);
    const bool same_signs = (k.p() > 0) == (k.q() > 0);
    return same_signs ? TorusKnot(P, Q) : TorusKnot(P, checked_neg(Q));
}

/// Representative of k with orientation forgotten: the one of {k, -k} whose
/// first nonzero coordinate is positive.
inline TorusKnot unoriented_rep(const TorusKnot& k) {
    if (k.p() < 0 || (k.p() == 0 && k.q() < 0)) return reverse(k);
    return k;
}

} // namespace ttc
