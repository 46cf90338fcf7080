#pragma once

#include <string>
#include <vector>

#include "eurcs/numeric.hpp"
#include "eurcs/radical.hpp"

namespace eurcs {

/// Dense univariate polynomial over the rationals, constant term first.
/// Trailing zero coefficients are stripped; the zero polynomial has degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly constant(Rational c);
  static UniPoly from_integers(const std::vector<Integer>& coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  /// Coefficient of x^i (zero beyond the degree).
  const Rational& operator[](int i) const;
  const Rational& leading() const;

  UniPoly derivative() const;
  Rational eval(const Rational& x) const;
  /// Exact evaluation in a quadratic field.
  RadicalExpr eval(const RadicalExpr& x) const;
  DyadicInterval eval(const DyadicInterval& x, unsigned bits) const;

  friend UniPoly operator+(const UniPoly& p, const UniPoly& q);
  friend UniPoly operator-(const UniPoly& p, const UniPoly& q);
  friend UniPoly operator*(const UniPoly& p, const UniPoly& q);
  friend UniPoly operator*(const Rational& c, const UniPoly& p);
  friend bool operator==(const UniPoly& p, const UniPoly& q) { return p.c_ == q.c_; }

  /// Euclidean division p = q*div + rem with deg(rem) < deg(div).
  static void divmod(const UniPoly& p, const UniPoly& div, UniPoly& q, UniPoly& rem);
  /// Exact quotient; throws std::logic_error if the remainder is nonzero.
  static UniPoly exact_div(const UniPoly& p, const UniPoly& div);

  /// Content-normalized integer coefficients with positive leading term
  /// (primitive part times the sign of the leading coefficient preserved).
  std::vector<Integer> primitive_integer() const;

  std::string str() const;  // human-readable, for diagnostics

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd (constant 1 for coprime inputs; zero polynomial if both zero).
UniPoly poly_gcd(const UniPoly& p, const UniPoly& q);

/// p / gcd(p, p'): same distinct roots, all simple.
UniPoly squarefree_part(const UniPoly& p);

}  // namespace eurcs
