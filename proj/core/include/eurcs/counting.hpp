#pragma once

#include <vector>

#include "eurcs/numeric.hpp"

namespace eurcs {

/// Query for permutations of S_m with exactly s descents whose top lies in
/// the set X (other descents unconstrained).
///
/// Note on semantics: the source formulas are stated for "at least s adequate
/// descents", but they demonstrably count the exactly-s variant (other
/// descent tops free): at m=3, X={2,3}, s=1 both expressions give 4, the
/// exactly-one count, while the at-least count is 5. This module adopts and
/// tests the exactly-s reading.
struct DescentQuery {
  int m;                   // permutations live in S_m
  std::vector<int> X;      // sorted ascending, subset of [m]
  int s;                   // target number of X-descents
};

enum class PExactForm { First, Second };

/// Exact count for the query via the selected alternating-sum expression.
/// Returns 0 for s > |X| (at most |X| descent tops can lie in X).
Integer p_exact(const DescentQuery& q, PExactForm form);

/// (m-|X|)! * prod (x_i - i): permutations of S_m whose descent-top set
/// contains X. X is normalized (sorted, deduplicated) internally.
Integer p_full(int m, std::vector<int> X);

/// Consecutive differences (x_1-1, x_2-x_1, ..., x_k-x_{k-1}); alpha(()) = ().
std::vector<int> alpha_tuple(std::vector<int> X);

/// (k+1)^{t_1} k^{t_2} ... 2^{t_k} for a k-tuple; the empty tuple gives 1.
/// Composed with alpha_tuple this counts permutations with descent-top set
/// contained in X.
Integer beta_hat_factorial(const std::vector<int>& t);

enum class RCountStrategy {
  ClosedForm,               // |X| <= 3 closed expressions
  InclusionExclusionAlpha,  // sum over J subset of X of alpha(J)^!
  InclusionExclusionPFull,  // sum over S subset of the complement (2^(n+1-|X|) terms)
  BruteForce,               // enumeration of S_{n+1} (cached per n)
};

/// |{sigma in S_{n+1} : DT(sigma) = X}| for X inside [2, n+1], |X| <= 3 for
/// the closed forms. All strategies agree on their shared domains.
Integer r_count(int n, std::vector<int> X, RCountStrategy strategy = RCountStrategy::ClosedForm,
                int brute_cap = 8);

enum class EulerianMethod { Expansion, Recurrence };

/// Eulerian number E(n+1, k); 0 outside 0 <= k <= n.
Integer eulerian_number(int n, int k, EulerianMethod method = EulerianMethod::Recurrence);

/// Coefficient vector (E(n+1,0), ..., E(n+1,n)) of A_n, constant term first.
std::vector<Integer> eulerian_poly(int n);

struct EulerianRow {
  int n;
  std::vector<Integer> coefficients;  // E(n+1, 0..n)
};

EulerianRow eulerian_row(int n);

}  // namespace eurcs
