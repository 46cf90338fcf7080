#pragma once

#include <vector>

#include "eurcs/numeric.hpp"
#include "eurcs/unipoly.hpp"

namespace eurcs {

/// Dyadic interval certified (via Sturm counts) to isolate exactly one real
/// root of some polynomial.
struct RootInterval {
  Rational lo;
  Rational hi;
  bool isolates = false;

  Rational width() const { return Rational(hi - lo); }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// Sturm chain of a rational polynomial, stored as primitive integer
/// polynomials so sign evaluations stay in integer arithmetic.
class SturmChain {
 public:
  explicit SturmChain(const UniPoly& p);

  /// Sign variation count of the chain at x.
  int variations_at(const Rational& x) const;
  /// Distinct real roots in (lo, hi]; endpoints must not be roots of p.
  int count(const Rational& lo, const Rational& hi) const;

 private:
  std::vector<std::vector<Integer>> chain_;
};

/// Distinct real roots of p in (lo, hi]. Root endpoints are handled by
/// dividing out the corresponding linear factors, so any rational bounds
/// are accepted.
int sturm_count(const UniPoly& p, const Rational& lo, const Rational& hi);

/// Number of distinct real roots of p.
int count_real_roots(const UniPoly& p);

/// Power-of-two dyadic B with all (complex) roots strictly inside |x| < B
/// (Cauchy bound 1 + max|c_i / c_deg| rounded up).
Rational root_bound(const UniPoly& p);

bool is_palindromic(const UniPoly& p);

/// All roots real, multiplicities allowed (square-free part compared).
bool is_real_rooted(const UniPoly& p);

/// Isolation workhorse: owns the square-free part and its Sturm chain so
/// repeated refinements reuse the chain.
class RootIsolator {
 public:
  explicit RootIsolator(const UniPoly& p);

  const UniPoly& squarefree() const { return g_; }
  int total_roots() const;
  RootInterval smallest(const Rational& width) const;
  RootInterval largest(const Rational& width) const;
  /// Shrinks iv (which must isolate a root) to the requested width.
  RootInterval refine(const RootInterval& iv, const Rational& width) const;
  /// All real roots as disjoint isolating intervals, ascending.
  std::vector<RootInterval> all_roots(const Rational& width) const;

 private:
  int count(const Rational& lo, const Rational& hi) const { return chain_.count(lo, hi); }
  Rational pick_non_root(const Rational& lo, const Rational& hi) const;
  UniPoly g_;
  SturmChain chain_;
  Rational bound_;
};

/// Isolating interval of width <= width for q_1^{(n)}, the leftmost root of
/// the n-th univariate Eulerian polynomial. All roots of A_n are negative;
/// |q_1^{(n)}| is the negation of this interval.
RootInterval extreme_root(int n, const Rational& width);

/// Default enclosure width used by the acceptance-facing paths.
Rational default_root_width();  // 2^-64

/// p(-x).
UniPoly reflect_poly(const UniPoly& p);

/// x^deg * p(1/x) (coefficients reversed); p(0) must be nonzero.
UniPoly reciprocal_poly(const UniPoly& p);

/// Exact order of a quadratic-field value against the algebraic root
/// isolated by iv. Equality is decided symbolically (the defining polynomial
/// evaluated at v in its field); separation by interval refinement.
std::strong_ordering compare_value_root(const RadicalExpr& v, const RootIsolator& iso,
                                        RootInterval iv);

/// Exact order of two isolated algebraic roots; the shared-root case is
/// decided through the gcd of the defining polynomials.
std::strong_ordering compare_roots(const RootIsolator& ia, RootInterval iva,
                                   const RootIsolator& ib, RootInterval ivb);

}  // namespace eurcs
