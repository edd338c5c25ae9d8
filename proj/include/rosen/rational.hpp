#pragma once

#include <gmpxx.h>

#include <string>

#include "rosen/errors.hpp"

namespace rosen {

// Arbitrary-precision rational, always canonical (gcd-reduced, positive
// denominator); mpq_class maintains this on its own.
using Rat = mpq_class;
using Int = mpz_class;

inline int sgn(const Rat& r) { return ::sgn(r); }
inline int sgn(const Int& z) { return ::sgn(z); }

// mpq_class(n, d) does not reduce; every fraction built from a raw pair goes
// through here so that GMP comparisons (which assume canonical form) stay
// sound.
inline Rat make_rat(const Int& num, const Int& den)
{
    if (den == 0) throw arithmetic_error("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}
inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

// floor(n/d) for a rational, exact.
inline Int rat_floor(const Rat& r)
{
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

// Parses "3/5", "0.52", "-1.5e-3" or plain integers into an exact rational.
// Decimal strings are read exactly (0.52 means 13/25), never via doubles.
Rat parse_rational(const std::string& text);

// Fixed-point decimal rendering with round-half-away, e.g. digits=6.
std::string rat_decimal(const Rat& r, int digits);

} // namespace rosen
