#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace segarr {

// Exact rational scalar. mpq_class keeps values in lowest terms with a
// positive denominator, which is exactly the invariant we need; every
// comparison below is exact.
using Rational = mpq_class;
using BigInt = mpz_class;

inline int sgn(const Rational& q) { return sgn(q.get_num()); }

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "7", "-3/4" or a plain decimal like "0.05" (read exactly as 5/100).
Rational parse_rational(const std::string& text);

// Serializes as "p" or "p/q"; inverse of parse_rational on canonical input.
std::string rational_to_string(const Rational& q);

}  // namespace segarr
