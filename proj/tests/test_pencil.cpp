#include <doctest.h>

#include <random>

#include "eurcs/bounds.hpp"
#include "eurcs/counting.hpp"
#include "eurcs/oracle.hpp"
#include "eurcs/pencil.hpp"

using namespace eurcs;

namespace {

QMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  QMatrix m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j)
      m.at(i, j) = Rational(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  return m;
}

}  // namespace

TEST_CASE("trunc3_eulerian coefficients are exact-descent-top counts") {
  const Trunc3Polynomial t2 = trunc3_eulerian(2);
  CHECK(t2.coefficient(Monomial3::var(2)) == Rational(1));
  CHECK(t2.coefficient(Monomial3::var(3)) == Rational(3));
  CHECK(t2.coefficient(Monomial3::of(2, 3)) == Rational(1));
  CHECK(t2.coefficient(Monomial3::of(2, 2)) == Rational(0));  // squarefree
  CHECK(t2.deg == 2);
  CHECK(trunc3_eulerian(3).coefficient(Monomial3::var(4)) == Rational(7));  // 2^3 - 1
}

TEST_CASE("the n=2 pencil matches the hand computation") {
  const Pencil p = eulerian_pencil(2);
  CHECK(p.labels == std::vector<std::string>{"1", "x2", "x3"});
  CHECK(p.constant == from_rows({{2, 1, 3}, {1, 1, 2}, {3, 2, 9}}));
  REQUIRE(p.coeffs.size() == 2);
  CHECK(p.coeffs[0].first == "x2");
  CHECK(p.coeffs[1].first == "x3");
  CHECK(p.coeffs[1].second == from_rows({{3, 2, 9}, {2, 2, 6}, {9, 6, 27}}));
}

TEST_CASE("series-built pencil equals the closed-form pencil") {
  for (int n = 1; n <= 6; ++n) {
    const Pencil closed = eulerian_pencil(n);
    const Pencil series = build_pencil(trunc3_eulerian(n));
    CHECK(closed.constant == series.constant);
    REQUIRE(closed.coeffs.size() == series.coeffs.size());
    for (size_t k = 0; k < closed.coeffs.size(); ++k) {
      CHECK(closed.coeffs[k].first == series.coeffs[k].first);
      CHECK(closed.coeffs[k].second == series.coeffs[k].second);
    }
  }
}

TEST_CASE("the univariate pencil rows follow the L-form values") {
  for (int n : {1, 2, 3, 10}) {
    const Pencil p = univariate_pencil(n);
    CHECK(p.labels == std::vector<std::string>{"1", "x"});
    CHECK(p.constant.at(0, 0) == Rational(n));
    CHECK(p.constant.at(0, 1) == lform_eulerian_uni(n, 1));
    CHECK(p.constant.at(1, 1) == lform_eulerian_uni(n, 2));
    CHECK(p.coeffs[0].second.at(1, 1) == lform_eulerian_uni(n, 3));
  }
  const Pencil p2 = univariate_pencil(2);
  CHECK(p2.constant == from_rows({{2, 4}, {4, 14}}));
  CHECK(p2.coeffs[0].second == from_rows({{4, 14}, {14, 52}}));
}

TEST_CASE("ghost-flagged pencil carries the zero row and zero coefficient") {
  const Pencil full = eulerian_pencil(2, true);
  CHECK(full.size() == 4);
  CHECK(full.labels == std::vector<std::string>{"1", "x1", "x2", "x3"});
  CHECK(full.coeffs[0].first == "x1");
  for (int i = 0; i < 4; ++i) {
    CHECK(full.constant.at(1, i) == Rational(0));
    CHECK(full.constant.at(i, 1) == Rational(0));
    for (const auto& [label, a] : full.coeffs) {
      CHECK(a.at(1, i) == Rational(0));
      CHECK(a.at(i, 1) == Rational(0));
    }
  }
  // Cutting the ghost row/column back out recovers the reduced pencil.
  const Pencil reduced = eulerian_pencil(2);
  CHECK(full.constant.at(0, 0) == reduced.constant.at(0, 0));
  CHECK(full.constant.at(2, 3) == reduced.constant.at(1, 2));
}

TEST_CASE("diagonal restriction sums the coefficient matrices") {
  const DiagonalPencil d = diagonal(eulerian_pencil(2));
  CHECK(d.msigma == from_rows({{4, 3, 11}, {3, 3, 8}, {11, 8, 33}}));
  const DiagonalPencil uni = diagonal(univariate_pencil(3));
  CHECK(uni.msigma == univariate_pencil(3).coeffs[0].second);
  Pencil empty;
  empty.constant = QMatrix(2);
  CHECK(diagonal(empty).msigma == QMatrix(2));
}

TEST_CASE("evaluate is exact and checks lengths") {
  const Pencil p = eulerian_pencil(2);
  CHECK(evaluate(p, {Rational(0), Rational(0)}) == p.constant);
  const DiagonalPencil d = diagonal(p);
  const Rational t = make_rational(-1, 4);
  const QMatrix lhs = evaluate(p, {t, t});
  QMatrix rhs = p.constant + (t * d.msigma);
  CHECK(lhs == rhs);
  CHECK_THROWS_AS(evaluate(p, {Rational(1)}), std::invalid_argument);
}

TEST_CASE("psd decides boundary cases exactly") {
  CHECK(psd(from_rows({{2, 1}, {1, 1}})));
  CHECK(!psd(from_rows({{0, 1}, {1, 0}})));
  CHECK(psd(from_rows({{2, 1, 3}, {1, 1, 2}, {3, 2, 9}})));
  CHECK(psd(from_rows({{1, 1}, {1, 1}})));          // determinant exactly zero
  CHECK(psd(QMatrix(3)));                           // zero matrix
  CHECK(!psd(from_rows({{1, 2}, {2, 1}})));
  QMatrix asym(2);
  asym.at(0, 1) = 1;
  CHECK_THROWS_AS(psd(asym), std::invalid_argument);
}

TEST_CASE("A0 is positive semidefinite for each Eulerian pencil") {
  for (int n = 1; n <= 12; ++n) CHECK(psd(eulerian_pencil(n).constant));
}

TEST_CASE("psd agrees with the characteristic-polynomial route on random matrices") {
  // Second exact route: M is PSD iff det(xI - M) has no root in (-B, 0);
  // a root at 0 itself is allowed.
  std::mt19937_64 rng(20250810);
  int positive_cases = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int sz = 1 + static_cast<int>(rng() % 5);
    QMatrix m(sz);
    const bool make_gram = trial % 2 == 0;
    QMatrix g(sz);
    for (int i = 0; i < sz; ++i)
      for (int j = 0; j < sz; ++j) g.at(i, j) = Rational(static_cast<long>(rng() % 9) - 4);
    if (make_gram) {
      for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j) {
          Rational s(0);
          for (int k = 0; k < sz; ++k) s += g.at(k, i) * g.at(k, j);
          m.at(i, j) = s;  // Gram matrices are PSD by construction
        }
    } else {
      for (int i = 0; i < sz; ++i)
        for (int j = i; j < sz; ++j) {
          m.at(i, j) = Rational(static_cast<long>(rng() % 9) - 4);
          m.at(j, i) = m.at(i, j);
        }
    }
    DiagonalPencil char_pencil;
    char_pencil.m0 = Rational(-1) * m;
    char_pencil.msigma = QMatrix(sz);
    for (int i = 0; i < sz; ++i) char_pencil.msigma.at(i, i) = 1;
    const UniPoly chi = det_diagonal_poly(char_pencil);
    const Rational bound = root_bound(chi);
    const int nonpos = sturm_count(chi, Rational(-bound), Rational(0));
    const bool zero_eig = sgn(chi.eval(Rational(0))) == 0;
    const bool psd_via_chi = nonpos == (zero_eig ? 1 : 0);
    CHECK(psd(m) == psd_via_chi);
    if (psd(m)) ++positive_cases;
  }
  CHECK(positive_cases >= 100);  // the Gram half guarantees PSD instances
}

TEST_CASE("membership on and off the diagonal segment") {
  const Pencil p = eulerian_pencil(2);
  CHECK(membership(p, {Rational(0), Rational(0)}));
  // -1/4 > -2+sqrt(3): inside the rigidly convex set, so inside the
  // relaxation.
  CHECK(membership(p, {make_rational(-1, 4), make_rational(-1, 4)}));
  CHECK(!membership(p, {Rational(-1), Rational(-1)}));
  // Rational probes straddling the boundary root -2+sqrt(3) = -0.26794919...
  const Rational above = make_rational(-267949, 1000000);
  const Rational below = make_rational(-267950, 1000000);
  CHECK(membership(p, {above, above}));
  CHECK(!membership(p, {below, below}));
}

TEST_CASE("relaxation contains the diagonal segment of the rigidly convex set") {
  for (int n = 2; n <= 8; ++n) {
    const Pencil p = eulerian_pencil(n);
    // q_n^{(n)} is the largest (closest to zero) root of A_n.
    const RootInterval qn = RootIsolator(UniPoly::from_integers(eulerian_poly(n))).largest(pow2(-30));
    for (int j = 1; j <= 5; ++j) {
      const Rational t(qn.hi * Rational(j) / 6);  // in (q_n, 0]
      CHECK(membership(p, std::vector<Rational>(static_cast<size_t>(n), t)));
    }
  }
}

TEST_CASE("every coefficient matrix is symmetric") {
  for (int n = 1; n <= 8; ++n) {
    const Pencil p = eulerian_pencil(n);
    CHECK(p.constant.is_symmetric());
    for (const auto& [label, a] : p.coeffs) CHECK(a.is_symmetric());
  }
}

TEST_CASE("diagonal determinants at small orders") {
  const UniPoly det_uni2 = det_diagonal_poly(diagonal(univariate_pencil(2)));
  CHECK(det_uni2 == UniPoly({Rational(12), Rational(48), Rational(12)}));

  const UniPoly det_multi2 = det_diagonal_poly(diagonal(eulerian_pencil(2)));
  CHECK(det_multi2 == UniPoly({Rational(4), Rational(24), Rational(36), Rational(8)}));

  CHECK(det_diagonal_poly(diagonal(univariate_pencil(1))).is_zero());

  const UniPoly det_multi3 = det_diagonal_poly(diagonal(eulerian_pencil(3)));
  CHECK(det_multi3 ==
        UniPoly({Rational(216), Rational(4440), Rational(29488), Rational(68976), Rational(27920)}));
}

TEST_CASE("univariate determinants stay quadratic with negative real roots") {
  for (int n = 2; n <= 12; ++n) {
    const UniPoly det = det_diagonal_poly(diagonal(univariate_pencil(n)));
    REQUIRE(det.degree() == 2);
    const Rational a = det[2], b = det[1], c = det[0];
    CHECK(sgn(Rational(b * b - 4 * a * c)) >= 0);
    CHECK(sgn(a) > 0);   // both roots negative: positive coefficients
    CHECK(sgn(b) > 0);
    CHECK(sgn(c) > 0);
    CHECK(sturm_count(det, Rational(0), root_bound(det)) == 0);
  }
}

TEST_CASE("determinant size cap") {
  CHECK_THROWS_AS(det_diagonal_poly(diagonal(eulerian_pencil(12)), 12), resource_error);
}

TEST_CASE("compression by (a, 1, ..., 1) collapses to the univariate pencil") {
  const std::vector<Rational> as{Rational(-1), Rational(0), make_rational(1, 2), Rational(1),
                                 Rational(7)};
  for (int n = 1; n <= 10; ++n) {
    const DiagonalPencil multi = diagonal(eulerian_pencil(n));
    const DiagonalPencil uni = diagonal(univariate_pencil(n));
    for (const Rational& a : as) {
      std::vector<Rational> v(static_cast<size_t>(n) + 1, Rational(1));
      v[0] = a;
      const std::vector<Rational> w{a, Rational(1)};
      CHECK(multi.m0.quadratic_form(v) == uni.m0.quadratic_form(w));
      CHECK(multi.msigma.quadratic_form(v) == uni.msigma.quadratic_form(w));
    }
  }
}

TEST_CASE("JSON serialization is bit-exact and round-trips") {
  const Pencil p = eulerian_pencil(2);
  const std::string text = pencil_to_json(p);
  CHECK(text.find("\"n\": 2") != std::string::npos);
  CHECK(text.find("\"x2\"") != std::string::npos);
  const Pencil q = pencil_from_json(text);
  CHECK(q.n == p.n);
  CHECK(q.labels == p.labels);
  CHECK(q.constant == p.constant);
  REQUIRE(q.coeffs.size() == p.coeffs.size());
  for (size_t k = 0; k < q.coeffs.size(); ++k) {
    CHECK(q.coeffs[k].first == p.coeffs[k].first);
    CHECK(q.coeffs[k].second == p.coeffs[k].second);
  }
  CHECK(pencil_to_json(q) == text);

  // Rationals survive exactly, including non-integers.
  Pencil frac;
  frac.n = 1;
  frac.labels = {"1", "x"};
  frac.constant = QMatrix(2);
  frac.constant.at(0, 1) = make_rational(22, 7);
  frac.constant.at(1, 0) = make_rational(22, 7);
  frac.coeffs.emplace_back("x", QMatrix(2));
  const Pencil back = pencil_from_json(pencil_to_json(frac));
  CHECK(back.constant.at(0, 1) == make_rational(22, 7));
}
