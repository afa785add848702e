#ifndef GERMINV_RATIONAL_HPP
#define GERMINV_RATIONAL_HPP

#include <gmpxx.h>

#include <numeric>
#include <stdexcept>
#include <string>

namespace germinv {

// Exact rational scalar. All coefficient arithmetic in the library is exact;
// nothing ever rounds.
using Rat = mpq_class;
using Int = mpz_class;

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

inline Rat rat_of(long num, long den = 1)
{
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rat& q)
{
    return q.get_str();
}

inline long gcd_long(long a, long b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace germinv

#endif
