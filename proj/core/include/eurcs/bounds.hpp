#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "eurcs/oracle.hpp"
#include "eurcs/pencil.hpp"
#include "eurcs/radical.hpp"

namespace eurcs {

/// All bounds are reported as positive lower/upper bounds on |q_1^{(n)}|;
/// the conversion from the largest-root side via palindromicity
/// (|q_1| = 1/|q_n|) happens in exactly one place per bound.

/// Corner bound (2^{n+1} - n - 2)/n from the top-left pencil entry.
Rational colucci_bound(int n);

/// Laguerre-Samuelson upper bound I(n) from the two leading coefficients;
/// needs n >= 2.
RadicalExpr laguerre_upper(int n);

struct UnBoundResult {
  bool degenerate = false;        // n = 1: rank-1 moment matrix, det == 0
  std::optional<RadicalExpr> value;
  Rational a, b, c;               // det(univariate pencil) = c + b x + a x^2
};

/// Optimal univariate bound 2a/(b - sqrt(b^2 - 4ac)); verifies a, b, c > 0
/// exactly instead of trusting the asymptotic sign analysis.
UnBoundResult un_bound(int n);

enum class VectorBoundStatus { Valid, InvalidDirection, Degenerate };

struct VectorBoundResult {
  VectorBoundStatus status = VectorBoundStatus::Valid;
  std::optional<Rational> value;  // numerator/denominator when Valid
  Rational numerator;             // v^T MSigma v
  Rational denominator;           // v^T M0 v
};

/// Linearization bound from v^T M0 v + x v^T MSigma v >= 0. A nonpositive
/// numerator reverses the inequality and is reported as a status, never as
/// a number.
VectorBoundResult vector_bound(const DiagonalPencil& d, const std::vector<Rational>& v);

/// vector_bound of the univariate pencil at v = (1,1), returned through the
/// closed form (cross-checked against the pencil on every call).
Rational b11_bound(int n);

/// Closed-form quadratics (D(y), N(y)) of the (y,1,-1,...,-1) linearization;
/// equal to the quadratic forms on the reduced multivariate pencil.
std::pair<UniPoly, UniPoly> mult_DN_quadratics(int n);

std::pair<Rational, Rational> mult_DN(int n, const Rational& y);
std::pair<RadicalExpr, RadicalExpr> mult_DN(int n, const RadicalExpr& y);

struct OptimalYResult {
  RadicalExpr y_star;             // leftmost root of N'D - ND'
  UniPoly derivative_numerator;   // N'D - ND' as a quadratic in y
  bool d_positive = false;        // exact sign of D(y*) (validity)
  bool n_positive = false;        // exact sign of N(y*) (validity)
  bool y_above_one = false;       // asymptotic sufficient condition, diagnostic only
};

/// Optimizes the linearization parameter; validity is decided by the exact
/// signs of D(y*), N(y*) (the asymptotic sufficient conditions fail at small
/// n while the bound is still valid).
OptimalYResult optimal_y(int n);

struct MultVResult {
  bool valid = false;
  std::optional<RadicalExpr> value;  // N(y*)/D(y*) in the field of y*
  OptimalYResult opt;
};

MultVResult mult_v_bound(int n);

int default_mult_det_cap();  // 8

struct MultDetResult {
  bool exact = false;
  std::optional<RadicalExpr> value;  // when the relevant factor has degree <= 2
  DyadicInterval enclosure;          // certified, width <= 2^-64
  UniPoly det;                       // diagonal determinant polynomial
  RootInterval root;                 // its root closest to zero
};

/// Reciprocal of the absolute value of the diagonal-determinant root closest
/// to zero (all roots negative).
MultDetResult mult_det_bound(int n, int det_cap = default_mult_det_cap());

struct BoundReport {
  int n = 0;
  Rational colucci;
  Rational b11;
  std::optional<RadicalExpr> laguerre;     // n >= 2
  std::optional<RadicalExpr> un;           // absent when degenerate
  std::optional<RadicalExpr> y_star;       // n >= 2
  std::optional<RadicalExpr> mult_v;       // present when valid
  std::optional<MultDetResult> mult_det;   // n in [2, det_cap]
  RootInterval oracle_root;                // encloses q_1^{(n)})
  DyadicInterval oracle_abs;               // |q_1^{(n)}|
  bool un_degenerate = false;
  bool mult_valid = false;
  bool mult_det_ge_un = false;             // diagnostic, not an invariant
};

/// Populates every bound for one n, attaches the oracle enclosure and
/// certifies the ordering invariants (throws std::logic_error on violation).
BoundReport bound_report(int n, int det_cap = default_mult_det_cap(),
                         const Rational& oracle_width = default_root_width());

struct RatioRow {
  int n = 0;
  DyadicInterval un_ratio;     // un(n) / 2^{n+1}
  DyadicInterval b11_ratio;    // b11(n) / 2^{n+1}
  DyadicInterval scaled_diff;  // (mult_v(n) - un(n)) * 2 * (4/3)^n
};

/// Asymptotic-law diagnostics; every entry is an interval of width at most
/// `width` (default 2^-48, i.e. beyond 40 correct bits).
std::vector<RatioRow> ratio_diagnostics(int n_min, int n_max, const Rational& width = pow2(-48));

}  // namespace eurcs
