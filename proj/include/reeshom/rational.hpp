#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace reeshom {

// Exact scalars. mpq_rational keeps values canonical (lowest terms,
// positive denominator), so no rounding or normalization drift is possible.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline Integer rational_num(const Rational& r) { return numerator(r); }
inline Integer rational_den(const Rational& r) { return denominator(r); }

}  // namespace reeshom
