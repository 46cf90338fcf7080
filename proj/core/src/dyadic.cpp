#include "eurcs/dyadic.hpp"

#include <algorithm>
#include <stdexcept>

namespace eurcs {

bool is_dyadic(const Rational& x) {
  const Integer den = x.get_den();
  return mpz_popcount(den.get_mpz_t()) == 1;  // canonical den > 0
}

DyadicInterval::DyadicInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw std::invalid_argument("DyadicInterval: lo > hi");
  if (!is_dyadic(lo) || !is_dyadic(hi))
    throw std::invalid_argument("DyadicInterval: endpoints must be dyadic");
}

DyadicInterval DyadicInterval::point(const Rational& x) { return DyadicInterval(x, x); }

DyadicInterval operator+(const DyadicInterval& a, const DyadicInterval& b) {
  return DyadicInterval(Rational(a.lo + b.lo), Rational(a.hi + b.hi));
}

DyadicInterval operator-(const DyadicInterval& a, const DyadicInterval& b) {
  return DyadicInterval(Rational(a.lo - b.hi), Rational(a.hi - b.lo));
}

DyadicInterval operator-(const DyadicInterval& a) {
  return DyadicInterval(Rational(-a.hi), Rational(-a.lo));
}

DyadicInterval operator*(const DyadicInterval& a, const DyadicInterval& b) {
  const Rational c1(a.lo * b.lo), c2(a.lo * b.hi), c3(a.hi * b.lo), c4(a.hi * b.hi);
  Rational lo = std::min(std::min(c1, c2), std::min(c3, c4));
  Rational hi = std::max(std::max(c1, c2), std::max(c3, c4));
  return DyadicInterval(std::move(lo), std::move(hi));
}

DyadicInterval dyadic_enclose(const Rational& x, unsigned bits) {
  if (is_dyadic(x)) return DyadicInterval::point(x);
  const Rational scaled(x * pow2(static_cast<long>(bits)));
  const Rational ulp = pow2(-static_cast<long>(bits));
  return DyadicInterval(Rational(Rational(floor_int(scaled)) * ulp),
                        Rational(Rational(ceil_int(scaled)) * ulp));
}

DyadicInterval scale(const DyadicInterval& iv, const Rational& c, unsigned bits) {
  Rational a(iv.lo * c), b(iv.hi * c);
  if (a > b) std::swap(a, b);
  if (is_dyadic(a) && is_dyadic(b)) return DyadicInterval(std::move(a), std::move(b));
  return DyadicInterval(dyadic_enclose(a, bits).lo, dyadic_enclose(b, bits).hi);
}

DyadicInterval reciprocal(const DyadicInterval& iv, unsigned bits) {
  if (sgn(iv.lo) <= 0 && sgn(iv.hi) >= 0)
    throw std::domain_error("reciprocal: interval contains zero");
  Rational a(1 / iv.hi), b(1 / iv.lo);
  if (a > b) std::swap(a, b);
  return DyadicInterval(dyadic_enclose(a, bits).lo, dyadic_enclose(b, bits).hi);
}

DyadicInterval sqrt_interval(const Rational& x, unsigned bits) {
  if (sgn(x) < 0) throw std::domain_error("sqrt_interval: negative radicand");
  if (sgn(x) == 0) return DyadicInterval::point(Rational(0));
  // floor(x * 4^bits); isqrt gives s with s^2 <= x*4^bits < (s+1)^2,
  // hence s/2^bits <= sqrt(x) < (s+1)/2^bits.
  const Rational scaled(x * pow_rat(Rational(4), static_cast<long>(bits)));
  const Integer t = floor_int(scaled);
  Integer s;
  mpz_sqrt(s.get_mpz_t(), t.get_mpz_t());
  const Rational ulp = pow2(-static_cast<long>(bits));
  Rational lo(Rational(s) * ulp);
  if (s * s == t && scaled.get_den() == 1) return DyadicInterval::point(lo);
  return DyadicInterval(std::move(lo), Rational(Rational(s + 1) * ulp));
}

std::string decimal_string(const Rational& x, int digits, RoundMode mode) {
  if (digits < 0) throw std::invalid_argument("decimal_string: negative digit count");
  const Integer scale = pow_int(10, static_cast<unsigned long>(digits));
  const Rational scaled(x * Rational(scale));
  Integer n = (mode == RoundMode::Down) ? floor_int(scaled) : ceil_int(scaled);
  std::string sign;
  if (sgn(n) < 0) {
    sign = "-";
    n = -n;
  }
  std::string s = n.get_str();
  if (digits == 0) return sign + s;
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  return sign + s;
}

}  // namespace eurcs
