#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace eurcs {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision rational, kept in canonical form (reduced, positive
/// denominator) by every constructor in this library.
using Rational = mpq_class;

/// Thrown when a configurable resource cap (brute-force order, determinant
/// size, ...) would be exceeded.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// num/den in canonical form. den must be nonzero.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw std::domain_error("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

inline Integer pow_int(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Integer pow_int(long base, unsigned long e) { return pow_int(Integer(base), e); }

/// base^e for integer e, negative exponents allowed (base != 0 then).
inline Rational pow_rat(const Rational& base, long e) {
  if (e >= 0) {
    Rational r(pow_int(base.get_num(), static_cast<unsigned long>(e)),
               pow_int(base.get_den(), static_cast<unsigned long>(e)));
    r.canonicalize();
    return r;
  }
  if (sgn(base) == 0) throw std::domain_error("pow_rat: negative power of zero");
  Rational r(pow_int(base.get_den(), static_cast<unsigned long>(-e)),
             pow_int(base.get_num(), static_cast<unsigned long>(-e)));
  r.canonicalize();
  return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// Power of two as a rational: 2^e with e possibly negative.
inline Rational pow2(long e) { return pow_rat(Rational(2), e); }

/// floor(x) as an integer.
inline Integer floor_int(const Rational& x) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return r;
}

/// ceil(x) as an integer.
inline Integer ceil_int(const Rational& x) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return r;
}

/// Canonical textual form ("p" or "p/q"), round-trips bit-exactly.
inline std::string to_string(const Rational& x) { return x.get_str(); }

/// Parses the canonical textual form produced by to_string.
inline Rational parse_rational(const std::string& s) {
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("parse_rational: bad rational literal '" + s + "'");
  if (sgn(Integer(q.get_den())) <= 0)
    throw std::invalid_argument("parse_rational: nonpositive denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace eurcs
