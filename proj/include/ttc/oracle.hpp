// Independent verification engines for the constituent formulas.
//
// Two routes that share nothing with the closed forms they check:
//
//   * brute_force_jk scans the whole (j,k) rectangle for j*q - k*p = 1 and
//     insists the solution is unique, instead of inverting anything mod p.
//
//   * cover_walk traces the edges of theta(p,q,r) in the universal cover
//     R^2 of T with exact rational arithmetic and reads the constituent
//     classes off endpoint translation vectors. No modular arithmetic, no
//     floating point, no epsilon comparisons.
//
// Cover conventions: coordinates are (x,y) = (longitude, meridian)
// coefficients, so a displacement between two lifts of the same point of T
// is literally a homology class. The lifted knot t(p,q) is the family of
// lines p*y - q*x = n over integer n; the line through the origin is the
// lift of the knot through the vertex v1. v2 is the first point where the
// meridian-direction arc out of v1 meets the knot again, so its lift sits
// at (0, 1/p). e1 and e2 are the two knot arcs from v1 to v2, lifted as
// segments of the central line ending at consecutive v2-lifts; e3 is the
// meridian arc, extended by r windings of the complementary annulus, which
// translate its endpoint by r*(p,q).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <limits>
#include <string>
#include <vector>

#include "ttc/checked.hpp"
#include "ttc/classify.hpp"
#include "ttc/constituents.hpp"
#include "ttc/errors.hpp"
#include "ttc/knot.hpp"

namespace ttc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct CoverPoint {
    Rational x;
    Rational y;

    friend bool operator==(const CoverPoint&, const CoverPoint&) = default;
};

// Piecewise-linear lift of one edge, endpoints projecting to v1 and v2.
using CoverPath = std::vector<CoverPoint>;

struct CoverWalk {
    CoverPath e1;
    CoverPath e2;
    CoverPath e3;
    HomologyClass k1;
    HomologyClass k2;
    HomologyClass k3;
    JKPair jk; // read off the walk geometry, not computed algebraically
};

namespace detail {

inline Int narrow(const BigInt& v, const char* what) {
    if (v < (std::numeric_limits<Int>::min)() || v > (std::numeric_limits<Int>::max)())
        throw OverflowError(std::string(what) + " exceeds int64 range");
    return v.convert_to<Int>();
}

inline bool is_integer(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

struct CoverVec {
    Rational x;
    Rational y;
};

inline CoverVec displacement(const CoverPath& path) {
    return {path.back().x - path.front().x, path.back().y - path.front().y};
}

// Difference of two edge displacements. Each edge runs from a v1 lift to a
// v2 lift, so a single displacement is generally fractional, but the
// difference of two of them connects lifts of one loop and must be a deck
// transformation, i.e. an integer vector.
inline HomologyClass class_between(const CoverVec& u, const CoverVec& v) {
    const Rational dx = u.x - v.x;
    const Rational dy = u.y - v.y;
    if (!is_integer(dx) || !is_integer(dy))
        throw DegenerateGeometry("displacement difference is not a deck transformation");
    return {narrow(boost::multiprecision::numerator(dx), "displacement"),
            narrow(boost::multiprecision::numerator(dy), "displacement")};
}

} // namespace detail

/// Exhaustive search for the unique (j,k) in [1,p-1] x [1,q-1] with
/// j*q - k*p = 1. Every cell of the rectangle is visited; NoSolution or
/// MultipleSolutions fire when the count is not exactly one (which cannot
/// happen for coprime p,q >= 2).
inline JKPair brute_force_jk(Int p, Int q) {
    JKPair found{0, 0};
    int count = 0;
    for (Int j = 1; j < p; ++j) {
        // value of j*q - k*p, updated by -p as k steps
        Int v = checked_sub(checked_mul(j, q), p);
        for (Int k = 1; k < q; ++k) {
            if (v == 1) {
                found = {j, k};
                ++count;
            }
            v = checked_sub(v, p);
        }
    }
    if (count == 0)
        throw NoSolution("no (j,k) with j*q - k*p = 1 for (" + std::to_string(p) + "," +
                         std::to_string(q) + "); inputs must be coprime and >= 2");
    if (count > 1)
        throw MultipleSolutions("multiple (j,k) solutions for (" + std::to_string(p) + "," +
                                std::to_string(q) + "); scan logic is broken");
    return found;
}

/// Trace the three edges of theta(p,q,r) in the universal cover and return
/// the lifted paths together with the constituent classes
/// k_i = class(e_{i+1}) - class(e_{i+2}).
inline CoverWalk cover_walk(Int p, Int q, Int r) {
    if (p < 2 || q < 2 || gcd_abs(p, q) != 1)
        throw InvalidInput("cover_walk requires coprime p,q >= 2, got (" +
                           std::to_string(p) + "," + std::to_string(q) + ")");

    const CoverPoint v1{0, 0};

    // v2: first intersection of the meridian ray {x = 0, y > 0} with a lift
    // of the knot. The candidate lines p*y - q*x = n cross the ray at
    // y = n/p; scan one period of them and keep the least positive hit.
    Rational v2_y;
    bool have_v2 = false;
    for (Int n = 1; n <= p; ++n) {
        const Rational hit(n, p);
        if (hit > 0 && (!have_v2 || hit < v2_y)) {
            v2_y = hit;
            have_v2 = true;
        }
    }
    if (!have_v2)
        throw DegenerateGeometry("meridian ray missed every knot lift");
    const CoverPoint v2{0, v2_y};

    // Walk the central line y = (q/p) x to the first lift of v2 on it: an
    // integer x with y - v2_y an integer. Deck transformations are integer
    // translations, so candidates are exactly the integer-x points.
    Int walk_j = 0;
    Int walk_k = 0;
    CoverPoint v2_ahead{0, 0};
    bool found = false;
    for (Int s = 1; s <= p && !found; ++s) {
        const Rational y = Rational(checked_mul(q, s), p);
        const Rational frac = y - v2_y;
        if (detail::is_integer(frac)) {
            walk_j = s;
            walk_k = detail::narrow(boost::multiprecision::numerator(frac), "walk k");
            v2_ahead = CoverPoint{Rational(s), y};
            found = true;
        }
    }
    if (!found)
        throw DegenerateGeometry("no lift of v2 on the central knot line");

    // e1 runs forward from the v1 lift at the origin; e2 is the remainder of
    // the knot, running from the next v1 lift at (p,q) back to the same v2
    // lift. e3 leaves v1 in the meridian direction and lands on the v2 fiber
    // after r windings of the annulus, each of which adds a (p,q)
    // translation.
    const CoverPoint v1_ahead{Rational(p), Rational(q)};
    const CoverPoint e3_end{Rational(checked_mul(r, p)),
                            v2_y + Rational(checked_mul(r, q))};

    CoverWalk w{
        CoverPath{v1, v2_ahead},
        CoverPath{v1_ahead, v2_ahead},
        CoverPath{v1, e3_end},
        {},
        {},
        {},
        JKPair{walk_j, walk_k},
    };

    // Displacement of each edge lift, taken v1-end to v2-end; the
    // constituent k_i is the loop e_{i+1} - e_{i+2}.
    const detail::CoverVec d1 = detail::displacement(w.e1);
    const detail::CoverVec d2 = detail::displacement(w.e2);
    const detail::CoverVec d3 = detail::displacement(w.e3);
    w.k3 = detail::class_between(d1, d2);
    w.k2 = detail::class_between(d3, d1);
    w.k1 = detail::class_between(d2, d3);
    if (!((w.k1 + w.k2) + w.k3).is_zero())
        throw DegenerateGeometry("constituent classes fail to close up");
    return w;
}

/// Constituent classes (k1, k2, k3) of theta(p,q,r) from the geometric walk.
inline std::array<HomologyClass, 3> cover_walk_constituents(Int p, Int q, Int r) {
    const CoverWalk w = cover_walk(p, q, r);
    return {w.k1, w.k2, w.k3};
}

struct CrossCheckFailure {
    Int p = 0;
    Int q = 0;
    Int r = 0;
    std::string detail;
};

struct CrossCheckReport {
    Int pairs_checked = 0;
    Int triples_checked = 0;
    std::vector<CrossCheckFailure> failures;

    bool ok() const { return failures.empty(); }
};

namespace detail {

inline std::array<TorusKnot, 3> isotopy_canonical_set(const ConstituentTriple& t) {
    std::array<TorusKnot, 3> s{
        canonical_unoriented(t.k1(), KnotEquivalence::Isotopy),
        canonical_unoriented(t.k2(), KnotEquivalence::Isotopy),
        canonical_unoriented(t.k3(), KnotEquivalence::Isotopy)};
    std::sort(s.begin(), s.end());
    return s;
}

} // namespace detail

/// Batch runner over all coprime 2 <= p < q <= range_max and |r| <= r_max:
/// closed-form (j,k) versus exhaustive search, closed-form classes versus
/// the cover walk, and the normalization statement that theta(p,q,r) has the
/// same unoriented constituents as the theta(P,Q) its classification names.
/// Failures are collected, not thrown.
inline CrossCheckReport cross_check(Int range_max, Int r_max) {
    if (range_max < 3)
        throw InvalidInput("cross_check requires range_max >= 3, got " +
                           std::to_string(range_max));
    if (r_max < 0)
        throw InvalidInput("cross_check requires r_max >= 0, got " + std::to_string(r_max));
    CrossCheckReport report;
    for (Int q = 3; q <= range_max; ++q) {
        for (Int p = 2; p < q; ++p) {
            if (gcd_abs(p, q) != 1) continue;
            ++report.pairs_checked;
            try {
                const JKPair closed = jk_pair(p, q);
                const JKPair scanned = brute_force_jk(p, q);
                if (closed != scanned)
                    report.failures.push_back(
                        {p, q, 0,
                         "jk_pair (" + std::to_string(closed.j) + "," + std::to_string(closed.k) +
                             ") != brute force (" + std::to_string(scanned.j) + "," +
                             std::to_string(scanned.k) + ")"});
            } catch (const Error& e) {
                report.failures.push_back({p, q, 0, std::string("jk check raised ") + e.name() +
                                                        ": " + e.what()});
            }
            for (Int r = -r_max; r <= r_max; ++r) {
                ++report.triples_checked;
                try {
                    const ThetaPQR theta(p, q, r);
                    const ConstituentTriple closed = constituents_pqr(theta);
                    const std::array<HomologyClass, 3> walked = cover_walk_constituents(p, q, r);
                    const std::array<HomologyClass, 3> formula{
                        closed.k1().homology(), closed.k2().homology(), closed.k3().homology()};
                    if (walked != formula) {
                        report.failures.push_back({p, q, r, "cover walk disagrees with closed form"});
                        continue;
                    }
                    const ThetaClassification verdict = classify_pqr(theta);
                    const auto* prime = std::get_if<PrimeTheta>(&verdict);
                    if (prime == nullptr) {
                        report.failures.push_back({p, q, r, "classification is not Prime"});
                        continue;
                    }
                    const auto normalized = constituents_pq(prime->p, prime->q);
                    if (detail::isotopy_canonical_set(closed) !=
                        detail::isotopy_canonical_set(normalized))
                        report.failures.push_back(
                            {p, q, r,
                             "unoriented constituents differ from theta(" +
                                 std::to_string(prime->p) + "," + std::to_string(prime->q) + ")"});
                } catch (const Error& e) {
                    report.failures.push_back({p, q, r, std::string("raised ") + e.name() + ": " +
                                                            e.what()});
                }
            }
        }
    }
    return report;
}

} // namespace ttc
