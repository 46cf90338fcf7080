#pragma once

#include <string>

#include "eurcs/numeric.hpp"

namespace eurcs {

/// True when x = m / 2^k (canonical denominator a power of two).
bool is_dyadic(const Rational& x);

/// Closed interval with dyadic endpoints enclosing one intended real value.
/// All operations return certified enclosures (outward rounding where the
/// exact endpoint would not be dyadic).
struct DyadicInterval {
  Rational lo;
  Rational hi;

  DyadicInterval() : lo(0), hi(0) {}
  DyadicInterval(Rational l, Rational h);

  /// Degenerate interval [x, x]; x must be dyadic.
  static DyadicInterval point(const Rational& x);

  Rational width() const { return Rational(hi - lo); }
  Rational mid() const { return Rational((lo + hi) / 2); }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const DyadicInterval& o) const { return lo <= o.lo && o.hi <= hi; }

  friend DyadicInterval operator+(const DyadicInterval& a, const DyadicInterval& b);
  friend DyadicInterval operator-(const DyadicInterval& a, const DyadicInterval& b);
  friend DyadicInterval operator*(const DyadicInterval& a, const DyadicInterval& b);
  friend DyadicInterval operator-(const DyadicInterval& a);
};

/// Smallest dyadic interval of width <= 2^-bits containing the rational x.
DyadicInterval dyadic_enclose(const Rational& x, unsigned bits);

/// Enclosure of c * iv with endpoints outward-rounded to 2^-bits precision.
DyadicInterval scale(const DyadicInterval& iv, const Rational& c, unsigned bits);

/// Enclosure of 1 / iv (iv must not contain 0), outward-rounded.
DyadicInterval reciprocal(const DyadicInterval& iv, unsigned bits);

/// Interval of width <= 2^-bits containing sqrt(x). Exact point interval when
/// x is a perfect square of a dyadic of the working precision.
/// Throws std::domain_error for x < 0.
DyadicInterval sqrt_interval(const Rational& x, unsigned bits);

enum class RoundMode { Down, Up };  // toward -inf / toward +inf

/// Decimal rendering of an exact rational with the requested directed
/// rounding; digits fractional digits, plain "-ddd.ddd" form.
std::string decimal_string(const Rational& x, int digits, RoundMode mode);

}  // namespace eurcs
