#include "eurcs/radical.hpp"

#include <stdexcept>
#include <utility>

namespace eurcs {

namespace {

/// If d = (p/q)^2 for a rational p/q, returns that square root.
bool rational_sqrt(const Rational& d, Rational& out) {
  const Integer num = d.get_num(), den = d.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return false;
  Integer sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  out = make_rational(sn, sd);
  return true;
}

int sign_rat(const Rational& x) { return sgn(x); }

}  // namespace

RadicalExpr::RadicalExpr(Rational a_, Rational b_, Rational d_)
    : a(std::move(a_)), b(std::move(b_)), d(std::move(d_)) {
  if (sgn(d) < 0) throw std::domain_error("RadicalExpr: negative radicand");
  if (sgn(b) == 0 || sgn(d) == 0) {
    b = 0;
    d = 0;
    return;
  }
  Rational r;
  if (rational_sqrt(d, r)) {  // fold perfect squares
    a += b * r;
    b = 0;
    d = 0;
  }
}

int sign_of(const RadicalExpr& e) {
  const int sa = sign_rat(e.a), sb = sign_rat(e.b);
  if (sb == 0 || sgn(e.d) == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: |a| vs |b|sqrt(d) via squares.
  const int t = sign_rat(Rational(e.a * e.a - e.b * e.b * e.d));
  return t == 0 ? 0 : (t > 0 ? sa : sb);
}

std::strong_ordering compare(const RadicalExpr& x, const RadicalExpr& y) {
  // Sign of A + B sqrt(dx) + C sqrt(dy) with A = x.a - y.a, B = x.b, C = -y.b.
  const Rational A(x.a - y.a);
  const Rational& B = x.b;
  const Rational C(-y.b);
  int s;
  if (sgn(C) == 0) {
    s = sign_of(RadicalExpr(A, B, x.d));
  } else if (sgn(B) == 0) {
    s = sign_of(RadicalExpr(A, C, y.d));
  } else {
    const int s1 = sign_of(RadicalExpr(A, B, x.d));
    const int s2 = sign_rat(C);
    if (s1 == 0) {
      s = s2;
    } else if (s1 == s2) {
      s = s1;
    } else {
      // |A + B sqrt(dx)|^2 vs C^2 dy, one more single-radical sign.
      const int t = sign_of(RadicalExpr(Rational(A * A + B * B * x.d - C * C * y.d),
                                        Rational(2 * A * B), x.d));
      s = t == 0 ? 0 : (t > 0 ? s1 : s2);
    }
  }
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool operator==(const RadicalExpr& x, const RadicalExpr& y) {
  return compare(x, y) == std::strong_ordering::equal;
}

namespace {

void require_same_field(const RadicalExpr& x, const RadicalExpr& y) {
  if (!x.is_rational() && !y.is_rational() && x.d != y.d)
    throw std::invalid_argument("RadicalExpr: mixed radicands in field arithmetic");
}

const Rational& field_radicand(const RadicalExpr& x, const RadicalExpr& y) {
  return x.is_rational() ? y.d : x.d;
}

}  // namespace

RadicalExpr operator-(const RadicalExpr& x) {
  return RadicalExpr(Rational(-x.a), Rational(-x.b), x.d);
}

RadicalExpr operator+(const RadicalExpr& x, const RadicalExpr& y) {
  require_same_field(x, y);
  return RadicalExpr(Rational(x.a + y.a), Rational(x.b + y.b), field_radicand(x, y));
}

RadicalExpr operator-(const RadicalExpr& x, const RadicalExpr& y) { return x + (-y); }

RadicalExpr operator*(const RadicalExpr& x, const RadicalExpr& y) {
  require_same_field(x, y);
  const Rational& d = field_radicand(x, y);
  return RadicalExpr(Rational(x.a * y.a + x.b * y.b * d), Rational(x.a * y.b + x.b * y.a), d);
}

RadicalExpr operator/(const RadicalExpr& x, const RadicalExpr& y) {
  require_same_field(x, y);
  if (sign_of(y) == 0) throw std::domain_error("RadicalExpr: division by zero");
  if (y.is_rational())
    return RadicalExpr(Rational(x.a / y.a), Rational(x.b / y.a), x.d);
  // Multiply by the conjugate; the norm a^2 - b^2 d is a nonzero rational.
  const Rational norm(y.a * y.a - y.b * y.b * y.d);
  return x * RadicalExpr(Rational(y.a / norm), Rational(-y.b / norm), y.d);
}

DyadicInterval enclose(const RadicalExpr& e, unsigned bits) {
  if (e.is_rational()) return dyadic_enclose(e.a, bits);
  const DyadicInterval root = sqrt_interval(e.d, bits + 8);
  const DyadicInterval term =
      scale(root, e.b, bits + 8) + dyadic_enclose(e.a, bits + 8);
  return term;
}

std::string decimal_string(const RadicalExpr& e, int digits, RoundMode mode) {
  if (e.is_rational()) return decimal_string(e.a, digits, mode);
  // Refine until both endpoints round to the same digit string; terminates
  // because an irrational value never sits exactly on a decimal grid point.
  for (unsigned bits = 64;; bits *= 2) {
    const DyadicInterval iv = enclose(e, bits);
    std::string lo = decimal_string(iv.lo, digits, mode);
    std::string hi = decimal_string(iv.hi, digits, mode);
    if (lo == hi) return lo;
    if (bits > (1u << 20)) throw std::logic_error("decimal_string: refinement failed");
  }
}

}  // namespace eurcs
