/**
 * Exact rational scalar/vector types and small numeric helpers.
 *
 * All geometry in this library is carried out over arbitrary-precision
 * rationals (GMP-backed). Values are always kept in lowest terms with a
 * positive denominator; boost::multiprecision maintains that canonical
 * form for us.
 */

#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace rbp {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using RatVector = std::vector<Rat>;
using IntVector = std::vector<Int>;

inline Int rat_num(const Rat& q) { return numerator(q); }
inline Int rat_den(const Rat& q) { return denominator(q); }

inline bool is_integer(const Rat& q) { return rat_den(q) == 1; }

/// Largest integer <= q.
inline Int rat_floor(const Rat& q)
{
    Int n = rat_num(q), d = rat_den(q);
    Int t = n / d;
    if (n < 0 && n % d != 0) --t;
    return t;
}

/// Smallest integer >= q.
inline Int rat_ceil(const Rat& q)
{
    Int n = rat_num(q), d = rat_den(q);
    Int t = n / d;
    if (n > 0 && n % d != 0) ++t;
    return t;
}

inline Int int_lcm(const Int& a, const Int& b)
{
    if (a == 0 || b == 0) return 0;
    return abs(a * b) / gcd(a, b);
}

/// lcm of the denominators of a range of rationals (1 for an empty range).
template <typename It>
Int denominator_lcm(It first, It last)
{
    Int m = 1;
    for (; first != last; ++first) m = int_lcm(m, rat_den(*first));
    return m;
}

inline Int denominator_lcm(const RatVector& v)
{
    return denominator_lcm(v.begin(), v.end());
}

/// Parses "p/q" or "p" (optionally signed). Throws std::invalid_argument on
/// junk or a zero denominator. The GMP string constructor does not
/// canonicalize, so the value is rebuilt through the two-argument
/// constructor, which reduces to lowest terms with a positive denominator.
inline Rat parse_rat(const std::string& s)
{
    if (s.empty()) throw std::invalid_argument("parse_rat: empty token");
    try {
        Rat q(s);
        if (rat_den(q) == 0) throw std::invalid_argument("zero denominator");
        return Rat(rat_num(q), rat_den(q));
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rat: bad token '" + s + "'");
    }
}

inline std::string rat_str(const Rat& q) { return q.str(); }

}  // namespace rbp
