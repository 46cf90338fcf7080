#include "eurcs/counting.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "eurcs/perms.hpp"

namespace eurcs {

namespace {

void validate_query(const DescentQuery& q) {
  if (q.m < 1) throw std::invalid_argument("p_exact: m >= 1 required");
  if (q.s < 0) throw std::invalid_argument("p_exact: s >= 0 required");
  if (!std::is_sorted(q.X.begin(), q.X.end()) ||
      std::adjacent_find(q.X.begin(), q.X.end()) != q.X.end())
    throw std::invalid_argument("p_exact: X must be strictly ascending");
  if (!q.X.empty() && (q.X.front() < 1 || q.X.back() > q.m))
    throw std::domain_error("p_exact: X must be a subset of [m]");
}

// |{y in [m] \ X : j < y <= m}| and |{y in [m] \ X : 1 <= y < j}|.
int alpha_counter(const std::vector<int>& X, int m, int j) {
  int c = 0;
  for (int y = j + 1; y <= m; ++y)
    if (!std::binary_search(X.begin(), X.end(), y)) ++c;
  return c;
}

int beta_counter(const std::vector<int>& X, int j) {
  int c = 0;
  for (int y = 1; y < j; ++y)
    if (!std::binary_search(X.begin(), X.end(), y)) ++c;
  return c;
}

}  // namespace

Integer p_exact(const DescentQuery& q, PExactForm form) {
  validate_query(q);
  const int s = q.s, m = q.m;
  const int xc = m - static_cast<int>(q.X.size());
  if (s > static_cast<int>(q.X.size())) return 0;
  Integer total(0);
  if (form == PExactForm::First) {
    for (int r = 0; r <= s; ++r) {
      Integer term = binomial(static_cast<unsigned long>(xc + r), static_cast<unsigned long>(r)) *
                     binomial(static_cast<unsigned long>(m + 1), static_cast<unsigned long>(s - r));
      for (int x : q.X) term *= 1 + r + alpha_counter(q.X, m, x);
      total += ((s - r) % 2 == 0) ? term : -term;
    }
  } else {
    const int top = static_cast<int>(q.X.size()) - s;
    for (int r = 0; r <= top; ++r) {
      Integer term = binomial(static_cast<unsigned long>(xc + r), static_cast<unsigned long>(r)) *
                     binomial(static_cast<unsigned long>(m + 1), static_cast<unsigned long>(top - r));
      for (int x : q.X) term *= r + beta_counter(q.X, x);
      total += ((top - r) % 2 == 0) ? term : -term;
    }
  }
  return factorial(static_cast<unsigned long>(xc)) * total;
}

Integer p_full(int m, std::vector<int> X) {
  if (m < 1) throw std::invalid_argument("p_full: m >= 1 required");
  std::sort(X.begin(), X.end());
  X.erase(std::unique(X.begin(), X.end()), X.end());
  if (!X.empty() && (X.front() < 1 || X.back() > m))
    throw std::domain_error("p_full: X must be a subset of [m]");
  Integer prod = factorial(static_cast<unsigned long>(m - static_cast<int>(X.size())));
  for (size_t i = 0; i < X.size(); ++i) prod *= X[i] - static_cast<int>(i) - 1;
  return prod;
}

std::vector<int> alpha_tuple(std::vector<int> X) {
  if (!std::is_sorted(X.begin(), X.end()))
    throw std::invalid_argument("alpha_tuple: X must be sorted ascending");
  std::vector<int> t;
  t.reserve(X.size());
  int prev = 1;
  for (int x : X) {
    t.push_back(x - prev);
    prev = x;
  }
  return t;
}

Integer beta_hat_factorial(const std::vector<int>& t) {
  const int k = static_cast<int>(t.size());
  Integer prod(1);
  for (int i = 0; i < k; ++i) {
    if (t[static_cast<size_t>(i)] < 0)
      throw std::invalid_argument("beta_hat_factorial: entries must be nonnegative");
    prod *= pow_int(k + 1 - i, static_cast<unsigned long>(t[static_cast<size_t>(i)]));
  }
  return prod;
}

namespace {

Integer r_closed_form(const std::vector<int>& X) {
  auto p2 = [](int e) { return pow_int(2, static_cast<unsigned long>(e)); };
  auto p3 = [](int e) { return pow_int(3, static_cast<unsigned long>(e)); };
  auto p4 = [](int e) { return pow_int(4, static_cast<unsigned long>(e)); };
  switch (X.size()) {
    case 0:
      return 1;
    case 1:
      return Integer(p2(X[0] - 1) - 1);
    case 2:
      return Integer(p3(X[0] - 1) * p2(X[1] - X[0]) - (p2(X[0] - 1) + p2(X[1] - 1)) + 1);
    case 3:
      return Integer(p4(X[0] - 1) * p3(X[1] - X[0]) * p2(X[2] - X[1]) -
                     (p3(X[0] - 1) * p2(X[1] - X[0]) + p3(X[1] - 1) * p2(X[2] - X[1]) +
                      p3(X[0] - 1) * p2(X[2] - X[0])) +
                     (p2(X[0] - 1) + p2(X[1] - 1) + p2(X[2] - 1)) - 1);
    default:
      throw std::invalid_argument("r_count: closed forms cover |X| <= 3 only");
  }
}

Integer r_alpha(const std::vector<int>& X) {
  const size_t k = X.size();
  Integer total(0);
  for (std::uint32_t sub = 0; sub < (1u << k); ++sub) {
    std::vector<int> J;
    for (size_t i = 0; i < k; ++i)
      if (sub & (1u << i)) J.push_back(X[i]);
    const Integer term = beta_hat_factorial(alpha_tuple(std::move(J)));
    total += ((k - static_cast<size_t>(__builtin_popcount(sub))) % 2 == 0) ? term : -term;
  }
  return total;
}

Integer r_pfull(int n, const std::vector<int>& X) {
  std::vector<int> complement;
  for (int y = 1; y <= n + 1; ++y)
    if (!std::binary_search(X.begin(), X.end(), y)) complement.push_back(y);
  if (complement.size() > 20)
    throw resource_error("r_count: inclusion-exclusion over the complement is too large");
  Integer total(0);
  for (std::uint32_t sub = 0; sub < (1u << complement.size()); ++sub) {
    std::vector<int> tops = X;
    for (size_t i = 0; i < complement.size(); ++i)
      if (sub & (1u << i)) tops.push_back(complement[i]);
    const Integer term = p_full(n + 1, std::move(tops));
    total += (__builtin_popcount(sub) % 2 == 0) ? term : -term;
  }
  return total;
}

}  // namespace

Integer r_count(int n, std::vector<int> X, RCountStrategy strategy, int brute_cap) {
  if (n < 1) throw std::invalid_argument("r_count: n >= 1 required");
  std::sort(X.begin(), X.end());
  if (std::adjacent_find(X.begin(), X.end()) != X.end())
    throw std::invalid_argument("r_count: X must have distinct elements");
  if (!X.empty() && (X.front() < 2 || X.back() > n + 1))
    throw std::domain_error("r_count: X must be a subset of [2, n+1]");
  switch (strategy) {
    case RCountStrategy::ClosedForm:
      return r_closed_form(X);
    case RCountStrategy::InclusionExclusionAlpha:
      return r_alpha(X);
    case RCountStrategy::InclusionExclusionPFull:
      return r_pfull(n, X);
    case RCountStrategy::BruteForce: {
      const MultiPoly& mp = eulerian_bruteforce_cached(n, brute_cap);
      return mp.coefficient(MultiPoly::mask_of(X));
    }
  }
  throw std::logic_error("r_count: unknown strategy");
}

namespace {

std::vector<Integer> compute_row(int n) {
  // A_1 = 1 + x; A_m = x(1-x) A'_{m-1} + (1 + m x) A_{m-1}.
  std::vector<Integer> row{1, 1};
  for (int m = 2; m <= n; ++m) {
    std::vector<Integer> next(static_cast<size_t>(m) + 1, Integer(0));
    for (size_t i = 0; i < row.size(); ++i) {
      const Integer& c = row[i];
      if (i >= 1) {
        next[i] += static_cast<long>(i) * c;           // x * A'
        if (i + 1 < next.size()) next[i + 1] -= static_cast<long>(i) * c;  // -x^2 * A'
      }
      next[i] += c;                                     // A
      next[i + 1] += m * c;                             // m x A
    }
    row = std::move(next);
  }
  return row;
}

std::mutex row_cache_mutex;
std::vector<std::vector<Integer>> row_cache;  // index n-1

std::vector<Integer> cached_row(int n) {
  std::lock_guard<std::mutex> lock(row_cache_mutex);
  while (static_cast<int>(row_cache.size()) < n)
    row_cache.push_back(compute_row(static_cast<int>(row_cache.size()) + 1));
  return row_cache[static_cast<size_t>(n - 1)];
}

}  // namespace

Integer eulerian_number(int n, int k, EulerianMethod method) {
  if (n < 1) throw std::invalid_argument("eulerian_number: n >= 1 required");
  if (k < 0 || k > n) return 0;
  if (method == EulerianMethod::Recurrence)
    return cached_row(n)[static_cast<size_t>(k)];
  Integer total(0);
  for (int i = 0; i <= k; ++i) {
    const Integer term =
        binomial(static_cast<unsigned long>(n + 2), static_cast<unsigned long>(i)) *
        pow_int(k + 1 - i, static_cast<unsigned long>(n + 1));
    total += (i % 2 == 0) ? term : -term;
  }
  return total;
}

std::vector<Integer> eulerian_poly(int n) {
  if (n < 1) throw std::invalid_argument("eulerian_poly: n >= 1 required");
  return cached_row(n);
}

EulerianRow eulerian_row(int n) { return EulerianRow{n, eulerian_poly(n)}; }

}  // namespace eurcs
