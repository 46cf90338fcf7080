#include <doctest.h>

#include <numeric>
#include <random>

#include "eurcs/counting.hpp"
#include "eurcs/perms.hpp"

using namespace eurcs;

TEST_CASE("descent_stats on the defining examples") {
  const DescentStats id = descent_stats(Permutation({1, 2, 3}));
  CHECK(id.descent_tops.empty());
  CHECK(id.ascent_tops == std::vector<int>{2, 3});
  CHECK(id.des == 0);

  const DescentStats rev = descent_stats(Permutation({3, 2, 1}));
  CHECK(rev.descent_tops == std::vector<int>{2, 3});
  CHECK(rev.ascent_tops.empty());
  CHECK(rev.des == 2);

  const DescentStats mid = descent_stats(Permutation({2, 3, 1}));
  CHECK(mid.descent_tops == std::vector<int>{3});
  CHECK(mid.ascent_tops == std::vector<int>{3});
  CHECK(mid.des == 1);
}

TEST_CASE("permutations must be bijections") {
  CHECK_THROWS_AS(Permutation({1, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({}), std::invalid_argument);
}

TEST_CASE("every adjacent pair is a descent or an ascent and 1 is never a top") {
  for (int m = 2; m <= 6; ++m) {
    std::vector<int> sigma(static_cast<size_t>(m));
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
      const DescentStats st = descent_stats(Permutation(sigma));
      CHECK(static_cast<int>(st.descent_tops.size() + st.ascent_tops.size()) == m - 1);
      for (int t : st.descent_tops) CHECK(t != 1);
      for (int t : st.ascent_tops) CHECK(t != 1);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
}

TEST_CASE("eulerian_bruteforce at small orders") {
  const MultiPoly a1 = eulerian_bruteforce(1);
  CHECK(a1.coefficient(0) == 1);
  CHECK(a1.coefficient(MultiPoly::mask_of({2})) == 1);
  CHECK(a1.coeff.size() == 2);

  const MultiPoly a2 = eulerian_bruteforce(2);  // 1 + x2 + 3 x3 + x2 x3
  CHECK(a2.coefficient(0) == 1);
  CHECK(a2.coefficient(MultiPoly::mask_of({2})) == 1);
  CHECK(a2.coefficient(MultiPoly::mask_of({3})) == 3);
  CHECK(a2.coefficient(MultiPoly::mask_of({2, 3})) == 1);
}

TEST_CASE("with ascents every monomial is homogeneous of degree n") {
  for (int n = 1; n <= 5; ++n) {
    const MultiPoly mp = eulerian_bruteforce(n, true);
    Integer total(0);
    for (const auto& [key, c] : mp.coeff) {
      const int deg = __builtin_popcount(key.first) + __builtin_popcount(key.second);
      CHECK(deg == n);
      total += c;
    }
    CHECK(total == factorial(static_cast<unsigned long>(n) + 1));
  }
}

TEST_CASE("row sums match Eulerian numbers") {
  for (int n = 1; n <= 6; ++n) {
    const MultiPoly mp = eulerian_bruteforce_cached(n);
    std::vector<Integer> sums(static_cast<size_t>(n) + 1, Integer(0));
    for (const auto& [key, c] : mp.coeff)
      sums[static_cast<size_t>(__builtin_popcount(key.first))] += c;
    for (int k = 0; k <= n; ++k) CHECK(sums[static_cast<size_t>(k)] == eulerian_number(n, k));
  }
}

TEST_CASE("brute force respects the cap") {
  CHECK_THROWS_AS(eulerian_bruteforce(9, false, 8), resource_error);
}

TEST_CASE("count_x_descents") {
  CHECK(count_x_descents(Permutation({3, 2, 1}), {2, 3}) == 2);
  CHECK(count_x_descents(Permutation({1, 2, 3}), {1, 2, 3}) == 0);
  CHECK(count_x_descents(Permutation({2, 3, 1}), {2}) == 0);
  CHECK(count_x_descents(Permutation({2, 3, 1}), {3}) == 1);
}

TEST_CASE("line restrictions recover univariate Eulerian data") {
  const UniPoly a2 = restrict_to_line(2, {Rational(1), Rational(1)});
  CHECK(a2 == UniPoly({Rational(1), Rational(4), Rational(1)}));

  const RzVerdict v2 = rz_direction_check(2, {Rational(1), Rational(1)});
  CHECK(v2.degree == 2);
  CHECK(v2.real_roots == 2);
  CHECK(v2.real_rooted);

  const RzVerdict v3 = rz_direction_check(3, {Rational(1), Rational(1), Rational(1)});
  CHECK(v3.degree == 3);
  CHECK(v3.real_roots == 3);
  CHECK(v3.real_rooted);

  // Direction (0,1) kills x2: the restriction is 1 + 3x.
  const UniPoly lin = restrict_to_line(2, {Rational(0), Rational(1)});
  CHECK(lin == UniPoly({Rational(1), Rational(3)}));
  const RzVerdict vlin = rz_direction_check(2, {Rational(0), Rational(1)});
  CHECK(vlin.degree == 1);
  CHECK(vlin.real_rooted);
}

TEST_CASE("seeded random directions keep restrictions real-rooted") {
  std::mt19937_64 rng(99);
  for (int n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Rational> dir;
      for (int i = 0; i < n; ++i) {
        const long den = 1 + static_cast<long>(rng() % 8);
        const long num =
            static_cast<long>(rng() % static_cast<unsigned long>(4 * den + 1)) - 2 * den;
        dir.push_back(make_rational(num, den));
      }
      CHECK(rz_direction_check(n, dir).real_rooted);
    }
}
