#pragma once

#include <array>
#include <compare>
#include <map>
#include <vector>

#include "eurcs/numeric.hpp"
#include "eurcs/perms.hpp"
#include "eurcs/unipoly.hpp"

namespace eurcs {

/// Monomial of total degree <= 3: sorted variable tags with multiplicity.
struct Monomial3 {
  std::array<int, 3> tags{0, 0, 0};
  int deg = 0;

  static Monomial3 unit() { return {}; }
  static Monomial3 var(int i);
  static Monomial3 of(int i, int j);
  static Monomial3 of(int i, int j, int k);

  int degree() const { return deg; }
  /// Product, total degree must stay <= 3.
  friend Monomial3 operator*(const Monomial3& a, const Monomial3& b);
  auto operator<=>(const Monomial3&) const = default;
};

/// Coefficients of a normalized polynomial (constant term 1) truncated at
/// total degree 3, plus the full degree (which the truncation alone does not
/// determine but the L-form needs for L_p(1)).
struct Trunc3Polynomial {
  std::vector<int> vars;  // sorted variable tags actually present
  int deg = 0;            // deg(p); L_p(1)
  std::map<Monomial3, Rational> coeff;  // degree-1..3 monomials; absent = 0

  Rational coefficient(const Monomial3& m) const;
};

/// Univariate truncation (single variable tag 1); divides out p(0).
Trunc3Polynomial trunc3_from_unipoly(const UniPoly& p);

/// Truncation of a brute-force multivariate Eulerian polynomial (ascents
/// suppressed); tags 2..n+1, squarefree monomials only.
Trunc3Polynomial trunc3_from_multipoly(const MultiPoly& mp);

/// L-form via the power-series definition: coefficient extraction from
/// -log(p(-x)/p(0)) truncated at degree 3. The authoritative oracle every
/// closed form below is tested against.
Rational lform_series(const Trunc3Polynomial& t, const Monomial3& m);

/// Full table of the series L-form on all monomials of degree <= 3 over the
/// truncation's variables (includes the unit monomial).
std::map<Monomial3, Rational> lform_series_table(const Trunc3Polynomial& t);

/// Per-shape closed forms in the truncation coefficients. The sign of the
/// a_i * a_ij term in the x_i^2 x_j case is the one the series expansion
/// yields (regression-pinned at the Eulerian value 2 for n=2, i=2, j=3).
Rational lform_closed(const Trunc3Polynomial& t, const Monomial3& m);

/// Closed forms of L_p on multivariate Eulerian input, tags in [2, n+1].
Rational lform_eulerian_multi(int n, const Monomial3& m);

/// Closed forms of L_p for the univariate Eulerian polynomial, k in 0..3.
Rational lform_eulerian_uni(int n, int k);

}  // namespace eurcs
