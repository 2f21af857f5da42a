#pragma once

#include <gmpxx.h>

#include <string>

namespace tensorinv {

// All primary-pipeline arithmetic is exact: arbitrary-precision integers and
// canonical-form rationals.  Doubles appear only in the dihedral character
// oracle.
using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

/// Canonicalized num/den; the raw two-argument Rational constructor does not
/// reduce, and GMP arithmetic requires reduced operands.
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Precondition: is_integral(r).
inline Integer to_integer(const Rational& r) { return r.get_num(); }

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace tensorinv
