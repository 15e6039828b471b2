// Closed-form constituent knots of torus theta-curves.
//
// theta(p,q) is the torus knot t(p,q) together with a short essential arc e3
// in the meridian direction; theta(p,q,r) lets e3 wind r extra times around
// the complementary annulus. Deleting one edge of a theta-curve leaves a
// knot; the three constituents are k_i = e_{i+1} - e_{i+2} (indices mod 3).
//
// For coprime p,q >= 2 there is a unique pair (j,k) with 1 <= j <= p-1,
// 1 <= k <= q-1 and j*q - k*p = 1; the constituents of theta(p,q) are
//   k3 = t(p,q),  k2 = -t(j,k),  k1 = -t(p-j, q-k),
// and theta(p,q,r) generalizes to
//   k3 = t(p,q),  k2 = t(rp-j, rq-k),  k1 = t(j-(r+1)p, k-(r+1)q).
#pragma once

#include <algorithm>
#include <array>
#include <string>

#include "ttc/checked.hpp"
#include "ttc/errors.hpp"
#include "ttc/knot.hpp"

namespace ttc {

struct JKPair {
    Int j = 0;
    Int k = 0;

    friend bool operator==(const JKPair&, const JKPair&) = default;
};

namespace detail {

struct EuclidResult {
    Int gcd;
    Int x; // coefficient of a in gcd = a*x + b*y
    Int y;
};

inline EuclidResult extended_euclid(Int a, Int b) {
    Int old_r = a, r = b;
    Int old_x = 1, x = 0;
    Int old_y = 0, y = 1;
    while (r != 0) {
        const Int qt = old_r / r;
        Int tmp = r;
        r = checked_sub(old_r, checked_mul(qt, r));
        old_r = tmp;
        tmp = x;
        x = checked_sub(old_x, checked_mul(qt, x));
        old_x = tmp;
        tmp = y;
        y = checked_sub(old_y, checked_mul(qt, y));
        old_y = tmp;
    }
    return {old_r, old_x, old_y};
}

} // namespace detail

/// Multiplicative inverse of x modulo n (n >= 2), in [1, n-1]. Negative x is
/// reduced mod n first, which realizes the identity inv(-x) = n - inv(x).
inline Int mod_inverse(Int x, Int n) {
    if (n < 2)
        throw InvalidInput("mod_inverse: modulus must be >= 2, got " + std::to_string(n));
    Int a = x % n;
    if (a < 0) a = checked_add(a, n);
    const auto e = detail::extended_euclid(a, n);
    if (e.gcd != 1)
        throw NotInvertible(std::to_string(x) + " is not invertible mod " +
                            std::to_string(n) + " (gcd " + std::to_string(e.gcd) + ")");
    Int y = e.x % n;
    if (y < 0) y = checked_add(y, n);
    return y;
}

/// The unique (j,k) with 1 <= j <= p-1, 1 <= k <= q-1 and j*q - k*p = 1, for
/// coprime p,q >= 2. j inverts q mod p and k inverts -p mod q.
inline JKPair jk_pair(Int p, Int q) {
    if (p < 2 || q < 2 || gcd_abs(p, q) != 1)
        throw InvalidInput("jk_pair requires coprime p,q >= 2, got (" +
                           std::to_string(p) + "," + std::to_string(q) + ")");
    const Int j = mod_inverse(q, p);
    const Int k = mod_inverse(checked_neg(p), q);
    if (checked_sub(checked_mul(j, q), checked_mul(k, p)) != 1)
        throw std::logic_error("jk_pair postcondition j*q - k*p = 1 failed");
    return {j, k};
}

// Oriented constituent triple. Construction checks the two structural facts
// every torus theta-curve satisfies: the three homology classes sum to zero
// (k1 + k2 = -k3) and each pair of classes meets algebraically in +-1.
class ConstituentTriple {
public:
    ConstituentTriple(TorusKnot k1, TorusKnot k2, TorusKnot k3)
        : k1_(k1), k2_(k2), k3_(k3) {
        const HomologyClass c1 = k1.homology(), c2 = k2.homology(), c3 = k3.homology();
        if (!((c1 + c2) + c3).is_zero())
            throw InvalidInput("constituent classes must sum to (0,0)");
        for (const Int d : {intersection_number(c1, c2), intersection_number(c2, c3),
                            intersection_number(c3, c1)}) {
            if (d != 1 && d != -1)
                throw InvalidInput("constituent classes must meet in +-1, got determinant " +
                                   std::to_string(d));
        }
    }

    const TorusKnot& k1() const { return k1_; }
    const TorusKnot& k2() const { return k2_; }
    const TorusKnot& k3() const { return k3_; }

    friend bool operator==(const ConstituentTriple&, const ConstituentTriple&) = default;

private:
    TorusKnot k1_;
    TorusKnot k2_;
    TorusKnot k3_;
};

/// Orientation-forgotten constituents, sorted lexicographically.
inline std::array<TorusKnot, 3> unoriented_set(const ConstituentTriple& t) {
    std::array<TorusKnot, 3> s{unoriented_rep(t.k1()), unoriented_rep(t.k2()),
                               unoriented_rep(t.k3())};
    std::sort(s.begin(), s.end());
    return s;
}

class ThetaPQR {
public:
    ThetaPQR(Int p, Int q, Int r) : p_(p), q_(q), r_(r) {
        if (p < 2 || q < 2 || gcd_abs(p, q) != 1)
            throw InvalidInput("theta(p,q,r) requires coprime p,q >= 2, got (" +
                               std::to_string(p) + "," + std::to_string(q) + ")");
    }

    Int p() const { return p_; }
    Int q() const { return q_; }
    Int r() const { return r_; }

    friend bool operator==(const ThetaPQR&, const ThetaPQR&) = default;

private:
    Int p_;
    Int q_;
    Int r_;
};

inline ConstituentTriple constituents_pqr(const ThetaPQR& t) {
    const auto [j, k] = jk_pair(t.p(), t.q());
    const Int p = t.p(), q = t.q(), r = t.r();
    const Int r1 = checked_add(r, 1);
    TorusKnot k3(p, q);
    TorusKnot k2(checked_sub(checked_mul(r, p), j), checked_sub(checked_mul(r, q), k));
    TorusKnot k1(checked_sub(j, checked_mul(r1, p)), checked_sub(k, checked_mul(r1, q)));
    return ConstituentTriple(k1, k2, k3);
}

/// Constituents of theta(p,q): the r = 0 case, where k2 = -t(j,k) and
/// k1 = -t(p-j, q-k).
inline ConstituentTriple constituents_pq(Int p, Int q) {
    return constituents_pqr(ThetaPQR(p, q, 0));
}

enum class ThetaSignVariant { PP, PN, NN, NP }; // theta(p,q), (p,-q), (-p,-q), (-p,q)

/// Unoriented constituent sets of the four sign variants of theta(p,q),
/// with the representatives written exactly as the variant formulas produce
/// them (PN is the mirror image of PP, NN the rotation, NP both). Sorted
/// lexicographically so equal sets compare equal.
inline std::array<TorusKnot, 3> constituents_sign_variant(Int p, Int q, ThetaSignVariant v) {
    const auto [j, k] = jk_pair(p, q);
    const Int pj = checked_sub(p, j), qk = checked_sub(q, k);
    std::array<TorusKnot, 3> s = [&]() -> std::array<TorusKnot, 3> {
        switch (v) {
        case ThetaSignVariant::PP:
            return {TorusKnot(p, q), TorusKnot(j, k), TorusKnot(pj, qk)};
        case ThetaSignVariant::PN:
            return {TorusKnot(p, checked_neg(q)), TorusKnot(j, checked_neg(k)),
                    TorusKnot(pj, checked_neg(qk))};
        case ThetaSignVariant::NN:
            return {TorusKnot(checked_neg(p), checked_neg(q)),
                    TorusKnot(checked_neg(j), checked_neg(k)),
                    TorusKnot(checked_neg(pj), checked_neg(qk))};
        case ThetaSignVariant::NP:
        default:
            return {TorusKnot(checked_neg(p), q), TorusKnot(checked_neg(j), k),
                    TorusKnot(checked_neg(pj), qk)};
        }
    }();
    std::sort(s.begin(), s.end());
    return s;
}

/// Constituents of theta-curves built on the trivial knot t(1,q), q >= 1,
/// with e3 winding r times: k3 = t(1,q), k2 = t(r-1, q(r-1)+1),
/// k1 = t(-r, -qr-1). Covers the unknotted-constituent case analysis.
inline ConstituentTriple constituents_1q(Int q, Int r) {
    if (q < 1)
        throw InvalidInput("constituents_1q requires q >= 1, got " + std::to_string(q));
    const Int rm1 = checked_sub(r, 1);
    TorusKnot k3(1, q);
    TorusKnot k2(rm1, checked_add(checked_mul(q, rm1), 1));
    TorusKnot k1(checked_neg(r), checked_sub(checked_neg(checked_mul(q, r)), 1));
    return ConstituentTriple(k1, k2, k3);
}

} // namespace ttc
