#pragma once

#include <compare>
#include <string>

#include "eurcs/dyadic.hpp"
#include "eurcs/numeric.hpp"

namespace eurcs {

/// Quadratic-field element a + b*sqrt(d) with exact sign determination.
///
/// Canonical form: d >= 0; b = 0 implies d = 0; rational perfect-square
/// radicands are folded into a, so is_rational() is decidable by b == 0.
struct RadicalExpr {
  Rational a;
  Rational b;
  Rational d;

  RadicalExpr() : a(0), b(0), d(0) {}
  RadicalExpr(Rational value) : a(std::move(value)), b(0), d(0) {}  // NOLINT(google-explicit-constructor)
  RadicalExpr(Rational a_, Rational b_, Rational d_);

  bool is_rational() const { return sgn(b) == 0; }

  RadicalExpr conjugate() const { return RadicalExpr(a, Rational(-b), d); }

  friend RadicalExpr operator-(const RadicalExpr& x);
  /// Field operations; operands must share the radicand (or be rational).
  friend RadicalExpr operator+(const RadicalExpr& x, const RadicalExpr& y);
  friend RadicalExpr operator-(const RadicalExpr& x, const RadicalExpr& y);
  friend RadicalExpr operator*(const RadicalExpr& x, const RadicalExpr& y);
  friend RadicalExpr operator/(const RadicalExpr& x, const RadicalExpr& y);

  friend bool operator==(const RadicalExpr& x, const RadicalExpr& y);
};

/// Exact sign of a + b*sqrt(d): case analysis on the signs of a, b and a
/// comparison of a^2 against b^2 d. Never approximate.
int sign_of(const RadicalExpr& e);

/// Exact order of two radical expressions whose radicands may differ.
/// Decided by isolating the radical terms and squaring at most twice;
/// equality is decided symbolically.
std::strong_ordering compare(const RadicalExpr& x, const RadicalExpr& y);

/// Certified enclosure of width <= ~2^-bits (exact point when rational).
DyadicInterval enclose(const RadicalExpr& e, unsigned bits);

/// Decimal rendering with directed rounding (refines internally until the
/// rounded digit string of the exact value is determined).
std::string decimal_string(const RadicalExpr& e, int digits, RoundMode mode);

}  // namespace eurcs
