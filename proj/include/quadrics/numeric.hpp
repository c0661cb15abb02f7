#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace quadrics {

// All bookkeeping is exact: integers are arbitrary precision, divisions are
// checked. A non-exact division anywhere means a genuine bug (for instance a
// Chern character that is not the character of an actual class), so the
// helpers below throw instead of rounding.

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int exact_div(const Int& n, const Int& d) {
    if (d == 0)
        throw std::domain_error("exact_div: division by zero");
    Int q = n / d;
    if (q * d != n)
        throw std::domain_error("exact_div: " + n.str() + " not divisible by " + d.str());
    return q;
}

// A rational that is supposed to be an integer, e.g. an Euler characteristic.
inline Int rat_to_int(const Rat& q) {
    if (boost::multiprecision::denominator(q) != 1)
        throw std::domain_error("rat_to_int: non-integral value " + q.str());
    return boost::multiprecision::numerator(q);
}

// Binomial coefficient with integer (possibly negative) top argument and
// small fixed bottom, as used in the twist formulas: C(n,k) = n(n-1)...(n-k+1)/k!.
inline Int binom(const Int& n, unsigned k) {
    Int num = 1;
    for (unsigned i = 0; i < k; ++i)
        num *= n - Int(i);
    Int fact = 1;
    for (unsigned i = 2; i <= k; ++i)
        fact *= Int(i);
    return exact_div(num, fact);
}

}  // namespace quadrics
