#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>

#include "eurcs/counting.hpp"
#include "eurcs/perms.hpp"

using namespace eurcs;

namespace {

/// All subsets of the given ground set with at most max_size elements.
std::vector<std::vector<int>> small_subsets(const std::vector<int>& ground, size_t max_size) {
  std::vector<std::vector<int>> out{{}};
  for (int v : ground) {
    const size_t sz = out.size();
    for (size_t i = 0; i < sz; ++i)
      if (out[i].size() < max_size) {
        auto copy = out[i];
        copy.push_back(v);
        out.push_back(std::move(copy));
      }
  }
  return out;
}

std::vector<int> range_set(int lo, int hi) {
  std::vector<int> v(static_cast<size_t>(hi - lo + 1));
  std::iota(v.begin(), v.end(), lo);
  return v;
}

/// Brute force: permutations of S_m with exactly (or at least) s descents
/// whose top lies in X.
Integer brute_x_descents(int m, const std::vector<int>& X, int s, bool at_least) {
  std::vector<int> sigma(static_cast<size_t>(m));
  std::iota(sigma.begin(), sigma.end(), 1);
  Integer count(0);
  do {
    const int c = count_x_descents(Permutation(sigma), X);
    if (at_least ? c >= s : c == s) ++count;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return count;
}

}  // namespace

TEST_CASE("p_exact on the worked examples") {
  CHECK(p_exact({2, {2}, 1}, PExactForm::First) == 1);
  CHECK(p_exact({3, {2, 3}, 1}, PExactForm::First) == 4);
  CHECK(p_exact({3, {2, 3}, 2}, PExactForm::First) == 1);
  CHECK(p_exact({3, {2, 3}, 3}, PExactForm::First) == 0);  // s > |X|
  CHECK(p_exact({3, {2, 3}, 3}, PExactForm::Second) == 0);
}

TEST_CASE("the formulas count exactly-s X-descents, not at-least-s") {
  // The disambiguation pin: 4 permutations of S_3 with exactly one
  // {2,3}-descent (132, 213, 231, 312); the at-least count is 5.
  CHECK(brute_x_descents(3, {2, 3}, 1, false) == 4);
  CHECK(brute_x_descents(3, {2, 3}, 1, true) == 5);
  CHECK(p_exact({3, {2, 3}, 1}, PExactForm::First) == 4);
  CHECK(p_exact({3, {2, 3}, 1}, PExactForm::Second) == 4);
}

TEST_CASE("both Hall-Remmel expressions agree and match brute force up to m = 9") {
  for (int m = 1; m <= 9; ++m) {
    const auto subsets = small_subsets(range_set(1, m), 3);
    // Single enumeration of S_m: descent tops are pairwise distinct, so the
    // X-descent count of sigma is |DT(sigma) & X| as bitmasks.
    std::vector<std::uint32_t> xmasks;
    for (const auto& X : subsets) {
      std::uint32_t mk = 0;
      for (int v : X) mk |= 1u << v;
      xmasks.push_back(mk);
    }
    std::vector<std::array<Integer, 4>> counts(subsets.size());
    std::vector<int> sigma(static_cast<size_t>(m));
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
      std::uint32_t dt = 0;
      for (size_t i = 0; i + 1 < sigma.size(); ++i)
        if (sigma[i] > sigma[i + 1]) dt |= 1u << sigma[i];
      for (size_t xi = 0; xi < subsets.size(); ++xi) {
        const int c = __builtin_popcount(dt & xmasks[xi]);
        if (c <= 3) ++counts[xi][static_cast<size_t>(c)];
      }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    for (size_t xi = 0; xi < subsets.size(); ++xi)
      for (int s = 0; s <= static_cast<int>(subsets[xi].size()); ++s) {
        const DescentQuery q{m, subsets[xi], s};
        const Integer first = p_exact(q, PExactForm::First);
        CHECK(first == p_exact(q, PExactForm::Second));
        CHECK(first == counts[xi][static_cast<size_t>(s)]);
      }
  }
}

TEST_CASE("p_full on the worked examples") {
  CHECK(p_full(3, {2, 3}) == 1);
  CHECK(p_full(3, {3}) == 4);
  CHECK(p_full(5, {}) == 120);
  CHECK(p_full(3, {3, 2}) == 1);  // unsorted input normalized
  CHECK(p_full(4, {1}) == 0);     // 1 is never a descent top
}

TEST_CASE("specialization: s = |X| collapses p_exact to p_full") {
  for (int m = 1; m <= 7; ++m)
    for (const auto& X : small_subsets(range_set(1, m), 3))
      CHECK(p_exact({m, X, static_cast<int>(X.size())}, PExactForm::Second) == p_full(m, X));
}

TEST_CASE("alpha tuple and the beta-hat-factorial operator") {
  CHECK(alpha_tuple({3}) == std::vector<int>{2});
  CHECK(alpha_tuple({2, 3, 4}) == std::vector<int>{1, 1, 1});
  CHECK(alpha_tuple({}).empty());
  CHECK(beta_hat_factorial({2}) == 4);
  CHECK(beta_hat_factorial({}) == 1);
  CHECK(beta_hat_factorial({1, 1, 1}) == 24);
}

TEST_CASE("beta_hat(alpha(X)) counts descent-top sets contained in X") {
  for (int m = 2; m <= 6; ++m)
    for (const auto& X : small_subsets(range_set(1, m), 3)) {
      std::vector<int> sigma(static_cast<size_t>(m));
      std::iota(sigma.begin(), sigma.end(), 1);
      Integer brute(0);
      do {
        const DescentStats st = descent_stats(Permutation(sigma));
        if (std::includes(X.begin(), X.end(), st.descent_tops.begin(), st.descent_tops.end()))
          ++brute;
      } while (std::next_permutation(sigma.begin(), sigma.end()));
      CHECK(beta_hat_factorial(alpha_tuple(X)) == brute);
    }
}

TEST_CASE("r_count on the worked examples") {
  CHECK(r_count(2, {3}) == 3);
  CHECK(r_count(3, {2, 4}) == 3);
  CHECK(r_count(3, {2, 3, 4}) == 1);
  CHECK(r_count(4, {}) == 1);  // only the identity has no descents
}

TEST_CASE("r_count strategies agree and layer sums give Eulerian numbers") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<Integer> layer(4, Integer(0));
    for (const auto& X : small_subsets(range_set(2, n + 1), 3)) {
      const Integer c = r_count(n, X, RCountStrategy::ClosedForm);
      CHECK(c == r_count(n, X, RCountStrategy::InclusionExclusionAlpha));
      CHECK(c == r_count(n, X, RCountStrategy::InclusionExclusionPFull));
      CHECK(c == r_count(n, X, RCountStrategy::BruteForce));
      layer[X.size()] += c;
    }
    for (int k = 0; k <= std::min(n, 3); ++k)
      CHECK(layer[static_cast<size_t>(k)] == eulerian_number(n, k));
  }
}

TEST_CASE("r_count error paths") {
  CHECK_THROWS_AS(r_count(5, {2, 3, 4, 5}, RCountStrategy::ClosedForm), std::invalid_argument);
  CHECK_THROWS_AS(r_count(2, {4}), std::domain_error);
  CHECK_THROWS_AS(r_count(2, {1}), std::domain_error);
  CHECK_THROWS_AS(r_count(9, {2}, RCountStrategy::BruteForce, 8), resource_error);
  CHECK(r_count(5, {2, 3, 4, 5}, RCountStrategy::InclusionExclusionAlpha) ==
        r_count(5, {2, 3, 4, 5}, RCountStrategy::BruteForce));
}

TEST_CASE("Eulerian numbers: methods, palindromicity, row sums") {
  CHECK(eulerian_number(1, 0) == 1);
  CHECK(eulerian_number(1, 1) == 1);
  CHECK(eulerian_number(3, 1) == 11);
  CHECK(eulerian_number(3, -1) == 0);
  CHECK(eulerian_number(3, 4) == 0);
  for (int n = 1; n <= 12; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(eulerian_number(n, k, EulerianMethod::Expansion) ==
            eulerian_number(n, k, EulerianMethod::Recurrence));
  for (int n = 1; n <= 20; ++n) {
    Integer sum(0);
    for (int k = 0; k <= n; ++k) {
      CHECK(eulerian_number(n, k) == eulerian_number(n, n - k));
      CHECK(eulerian_number(n, k) > 0);
      sum += eulerian_number(n, k);
    }
    CHECK(sum == factorial(static_cast<unsigned long>(n) + 1));
  }
}

TEST_CASE("eulerian_poly rows") {
  CHECK(eulerian_poly(1) == std::vector<Integer>{1, 1});
  CHECK(eulerian_poly(2) == std::vector<Integer>{1, 4, 1});
  CHECK(eulerian_poly(3) == std::vector<Integer>{1, 11, 11, 1});
  CHECK(eulerian_row(4).coefficients == std::vector<Integer>{1, 26, 66, 26, 1});
}
