#pragma once
// Exact rational arithmetic. GMP-backed via Boost.Multiprecision; values are
// always stored reduced with a positive denominator, which is exactly the
// canonical-form contract the rest of the library relies on.

#include <boost/multiprecision/gmp.hpp>

#include <string>

#include "affschur/error.hpp"

namespace affschur {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline bool isInteger(const Rational& r) { return denominator(r) == 1; }

// Renders "p" for integers and "p/q" otherwise (q > 0).
inline std::string ratStr(const Rational& r) { return r.str(); }

// Accepts "p" or "p/q" with optional sign.
inline Rational ratParse(const std::string& s) {
  try {
    Rational r(s);
    return r;
  } catch (const std::exception&) {
    fail(Errc::parse, "bad rational literal: '" + s + "'");
  }
}

// Binomial coefficient as an exact rational (0 for k < 0 or k > n).
inline Rational binomial(long n, long k) {
  if (k < 0 || k > n) return Rational(0);
  Rational r(1);
  for (long i = 0; i < k; ++i) { r *= Rational(n - i); r /= Rational(i + 1); }
  return r;
}

inline Rational factorial(long n) {
  Rational r(1);
  for (long i = 2; i <= n; ++i) r *= Rational(i);
  return r;
}

}  // namespace affschur
