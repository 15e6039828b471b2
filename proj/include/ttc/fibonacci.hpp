// Fibonacci torus theta-curves theta(F_n, F_{n+1}) and the classical
// identities that drive their constituent pattern. Consecutive Fibonacci
// numbers are coprime, and the (j,k) pair of (F_n, F_{n+1}) is itself a pair
// of consecutive Fibonacci numbers, which of the two depending on the parity
// of n. Cassini's identity F_{n-1}F_{n+1} - F_n^2 = (-1)^n settles the even
// case and Tagiuri's identity F_{n-1}F_n - F_{n-2}F_{n+1} = (-1)^n the odd
// case.
//
// fib, cassini and tagiuri work in arbitrary precision; the record builders
// hand winding numbers to the core library and therefore live in the
// checked int64 domain (good through n = 46, a checked error beyond).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <string>
#include <vector>

#include "ttc/checked.hpp"
#include "ttc/constituents.hpp"
#include "ttc/errors.hpp"

namespace ttc {

inline boost::multiprecision::cpp_int fib(Int n) {
    if (n < 0)
        throw InvalidInput("fib requires n >= 0, got " + std::to_string(n));
    boost::multiprecision::cpp_int a = 0, b = 1;
    for (Int i = 0; i < n; ++i) {
        const boost::multiprecision::cpp_int next = a + b;
        a = b;
        b = next;
    }
    return a;
}

/// F_{n-1}F_{n+1} - F_n^2 for n >= 1; always (-1)^n.
inline boost::multiprecision::cpp_int cassini(Int n) {
    if (n < 1)
        throw InvalidInput("cassini requires n >= 1, got " + std::to_string(n));
    return fib(n - 1) * fib(n + 1) - fib(n) * fib(n);
}

/// F_{n-1}F_n - F_{n-2}F_{n+1} for n >= 2; always (-1)^n.
inline boost::multiprecision::cpp_int tagiuri(Int n) {
    if (n < 2)
        throw InvalidInput("tagiuri requires n >= 2, got " + std::to_string(n));
    return fib(n - 1) * fib(n) - fib(n - 2) * fib(n + 1);
}

struct FibRecord {
    Int n;
    Int fn;  // F_n
    Int fn1; // F_{n+1}
    ConstituentTriple constituents;

    friend bool operator==(const FibRecord&, const FibRecord&) = default;
};

namespace detail {

inline Int fib_int(Int n) {
    const boost::multiprecision::cpp_int v = fib(n);
    if (v > (std::numeric_limits<Int>::max)())
        throw OverflowError("F_" + std::to_string(n) + " exceeds int64 range");
    return v.convert_to<Int>();
}

} // namespace detail

/// Constituents of theta(F_n, F_{n+1}) for n >= 3, with the closed-form
/// pattern verified on the way out: the unoriented set is
/// { t(F_{n-2},F_{n-1}), t(F_{n-1},F_n), t(F_n,F_{n+1}) }, and the k1/k2
/// roles alternate with the parity of n (n even: k2 = -t(F_{n-1},F_n);
/// n odd: k1 takes that knot).
inline FibRecord fib_theta(Int n) {
    if (n < 3)
        throw InvalidInput("fib_theta requires n >= 3, got " + std::to_string(n));
    const Int f2 = detail::fib_int(n - 2);
    const Int f1 = detail::fib_int(n - 1);
    const Int fn = detail::fib_int(n);
    const Int fn1 = detail::fib_int(n + 1);
    const ConstituentTriple c = constituents_pq(fn, fn1);

    const TorusKnot small(checked_neg(f2), checked_neg(f1)); // -t(F_{n-2},F_{n-1})
    const TorusKnot large(checked_neg(f1), checked_neg(fn)); // -t(F_{n-1},F_n)
    const TorusKnot expected_k2 = (n % 2 == 0) ? large : small;
    const TorusKnot expected_k1 = (n % 2 == 0) ? small : large;
    if (c.k2() != expected_k2 || c.k1() != expected_k1 || c.k3() != TorusKnot(fn, fn1))
        throw std::logic_error("fibonacci constituent pattern violated at n = " +
                               std::to_string(n));
    return {n, fn, fn1, c};
}

/// Records for n = 3..n_max. The n = 3..7 slice is the classical table of
/// theta(2,3) through theta(13,21).
inline std::vector<FibRecord> fib_table(Int n_max) {
    if (n_max < 3)
        throw InvalidInput("fib_table requires n_max >= 3, got " + std::to_string(n_max));
    std::vector<FibRecord> out;
    out.reserve(static_cast<size_t>(n_max - 2));
    for (Int n = 3; n <= n_max; ++n) out.push_back(fib_theta(n));
    return out;
}

} // namespace ttc
