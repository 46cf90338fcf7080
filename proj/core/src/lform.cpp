#include "eurcs/lform.hpp"

#include <algorithm>
#include <stdexcept>

namespace eurcs {

Monomial3 Monomial3::var(int i) {
  Monomial3 m;
  m.tags = {i, 0, 0};
  m.deg = 1;
  return m;
}

Monomial3 Monomial3::of(int i, int j) {
  Monomial3 m;
  m.tags = {std::min(i, j), std::max(i, j), 0};
  m.deg = 2;
  return m;
}

Monomial3 Monomial3::of(int i, int j, int k) {
  Monomial3 m;
  m.tags = {i, j, k};
  std::sort(m.tags.begin(), m.tags.end());
  m.deg = 3;
  return m;
}

Monomial3 operator*(const Monomial3& a, const Monomial3& b) {
  if (a.deg + b.deg > 3) throw std::invalid_argument("Monomial3: product exceeds degree 3");
  Monomial3 m;
  m.deg = a.deg + b.deg;
  int pos = 0;
  for (int t = 0; t < a.deg; ++t) m.tags[static_cast<size_t>(pos++)] = a.tags[static_cast<size_t>(t)];
  for (int t = 0; t < b.deg; ++t) m.tags[static_cast<size_t>(pos++)] = b.tags[static_cast<size_t>(t)];
  std::sort(m.tags.begin(), m.tags.begin() + m.deg);
  return m;
}

Rational Trunc3Polynomial::coefficient(const Monomial3& m) const {
  if (m.deg == 0) return Rational(1);
  const auto it = coeff.find(m);
  return it == coeff.end() ? Rational(0) : it->second;
}

Trunc3Polynomial trunc3_from_unipoly(const UniPoly& p) {
  if (p.is_zero() || sgn(p[0]) == 0)
    throw std::domain_error("trunc3_from_unipoly: p(0) != 0 required");
  Trunc3Polynomial t;
  t.vars = {1};
  t.deg = p.degree();
  if (sgn(p[1]) != 0) t.coeff[Monomial3::var(1)] = Rational(p[1] / p[0]);
  if (sgn(p[2]) != 0) t.coeff[Monomial3::of(1, 1)] = Rational(p[2] / p[0]);
  if (sgn(p[3]) != 0) t.coeff[Monomial3::of(1, 1, 1)] = Rational(p[3] / p[0]);
  return t;
}

Trunc3Polynomial trunc3_from_multipoly(const MultiPoly& mp) {
  if (mp.with_ascents)
    throw std::invalid_argument("trunc3_from_multipoly: ascent tags are not truncation input");
  Trunc3Polynomial t;
  for (int tag = 2; tag <= mp.n + 1; ++tag) t.vars.push_back(tag);
  t.deg = mp.n;
  for (const auto& [key, c] : mp.coeff) {
    std::vector<int> tags;
    for (int tag = 2; tag <= mp.n + 1; ++tag)
      if (key.first & (1u << tag)) tags.push_back(tag);
    if (tags.empty() || tags.size() > 3) continue;
    Monomial3 m = tags.size() == 1   ? Monomial3::var(tags[0])
                  : tags.size() == 2 ? Monomial3::of(tags[0], tags[1])
                                     : Monomial3::of(tags[0], tags[1], tags[2]);
    t.coeff[m] = Rational(c);
  }
  return t;
}

namespace {

Rational multinomial_weight(const Monomial3& m) {
  // |alpha|! / prod(mult!) for the exponent vector of m.
  if (m.deg <= 1) return Rational(1);
  if (m.deg == 2) return m.tags[0] == m.tags[1] ? Rational(1) : Rational(2);
  if (m.tags[0] == m.tags[2]) return Rational(1);
  if (m.tags[0] == m.tags[1] || m.tags[1] == m.tags[2]) return Rational(3);
  return Rational(6);
}

using Table = std::map<Monomial3, Rational>;

Table truncated_product(const Table& f, const Table& g) {
  Table h;
  for (const auto& [mf, cf] : f)
    for (const auto& [mg, cg] : g) {
      if (mf.deg + mg.deg > 3) continue;
      h[mf * mg] += cf * cg;
    }
  return h;
}

}  // namespace

std::map<Monomial3, Rational> lform_series_table(const Trunc3Polynomial& t) {
  // u = p(-x) - 1; -log(1+u) = -u + u^2/2 - u^3/3 up to degree 3.
  Table u;
  for (const auto& [m, c] : t.coeff) {
    if (sgn(c) == 0) continue;
    u[m] = (m.deg % 2 == 0) ? c : Rational(-c);
  }
  const Table u2 = truncated_product(u, u);
  const Table u3 = truncated_product(u2, u);
  Table series;
  for (const auto& [m, c] : u) series[m] -= c;
  for (const auto& [m, c] : u2) series[m] += c / 2;
  for (const auto& [m, c] : u3) series[m] -= c / 3;
  Table L;
  L[Monomial3::unit()] = Rational(t.deg);
  for (const auto& [m, c] : series)
    L[m] = Rational(c * m.deg / multinomial_weight(m));
  return L;
}

Rational lform_series(const Trunc3Polynomial& t, const Monomial3& m) {
  if (m.deg == 0) return Rational(t.deg);
  const Table L = lform_series_table(t);
  const auto it = L.find(m);
  return it == L.end() ? Rational(0) : it->second;
}

Rational lform_closed(const Trunc3Polynomial& t, const Monomial3& m) {
  const auto a = [&t](const Monomial3& mm) { return t.coefficient(mm); };
  switch (m.deg) {
    case 0:
      return Rational(t.deg);
    case 1:
      return a(m);
    case 2: {
      const int i = m.tags[0], j = m.tags[1];
      if (i == j) return Rational(-2 * a(m) + a(Monomial3::var(i)) * a(Monomial3::var(i)));
      return Rational(-a(m) + a(Monomial3::var(i)) * a(Monomial3::var(j)));
    }
    case 3: {
      const int i = m.tags[0], j = m.tags[1], k = m.tags[2];
      if (i == k) {  // x_i^3
        const Rational ai = a(Monomial3::var(i));
        return Rational(3 * a(m) - 3 * ai * a(Monomial3::of(i, i)) + ai * ai * ai);
      }
      if (i == j || j == k) {  // x_p^2 x_q with p the repeated tag
        const int p = (i == j) ? i : k;
        const int q = (i == j) ? k : i;
        const Rational ap = a(Monomial3::var(p)), aq = a(Monomial3::var(q));
        return Rational(a(m) - ap * a(Monomial3::of(p, q)) - aq * a(Monomial3::of(p, p)) +
                        ap * ap * aq);
      }
      const Rational ai = a(Monomial3::var(i)), aj = a(Monomial3::var(j)), ak = a(Monomial3::var(k));
      return Rational((a(m) - ai * a(Monomial3::of(j, k)) - aj * a(Monomial3::of(i, k)) -
                       ak * a(Monomial3::of(i, j)) + 2 * ai * aj * ak) /
                      2);
    }
    default:
      throw std::invalid_argument("lform_closed: degree above 3");
  }
}

Rational lform_eulerian_multi(int n, const Monomial3& m) {
  if (n < 1) throw std::invalid_argument("lform_eulerian_multi: n >= 1 required");
  for (int t = 0; t < m.deg; ++t) {
    const int tag = m.tags[static_cast<size_t>(t)];
    if (tag < 2 || tag > n + 1)
      throw std::domain_error("lform_eulerian_multi: variable tag outside [2, n+1]");
  }
  const auto pw2 = [](long e) { return pow_rat(Rational(2), e); };
  const auto pw3 = [](long e) { return pow_rat(Rational(3), e); };
  const auto pw4 = [](long e) { return pow_rat(Rational(4), e); };
  switch (m.deg) {
    case 0:
      return Rational(n);
    case 1:
      return Rational(pw2(m.tags[0] - 1) - 1);
    case 2: {
      const int i = m.tags[0], j = m.tags[1];
      if (i == j) {
        const Rational v(pw2(i - 1) - 1);
        return Rational(v * v);
      }
      return Rational(pw2(i + j - 2) - pw2(j - i) * pw3(i - 1));
    }
    case 3: {
      const int i = m.tags[0], j = m.tags[1], k = m.tags[2];
      if (i == k) {
        const Rational v(pw2(i - 1) - 1);
        return Rational(v * v * v);
      }
      if (i == j || j == k) {  // x_p^2 x_q
        const int p = (i == j) ? i : k;
        const int q = (i == j) ? k : i;
        if (p < q)
          return Rational(pw2(-3 - p + q) * (pw2(p) - 2) * (3 * pw4(p) - 4 * pw3(p)) / 3);
        return Rational(pw2(-3 + p - q) * (pw2(p) - 2) * (3 * pw4(q) - 4 * pw3(q)) / 3);
      }
      return Rational(pw2(i + j + k - 3) - pw2(j + k - i - 1) * pw3(i - 1) -
                      pw2(i - j + k - 2) * pw3(j - 1) + pw2(2 * i - j + k - 3) * pw3(j - i));
    }
    default:
      throw std::invalid_argument("lform_eulerian_multi: degree above 3");
  }
}

Rational lform_eulerian_uni(int n, int k) {
  if (n < 1) throw std::invalid_argument("lform_eulerian_uni: n >= 1 required");
  const auto e = [](long b, long ex) { return pow_int(b, static_cast<unsigned long>(ex)); };
  switch (k) {
    case 0:
      return Rational(n);
    case 1:
      return Rational(Integer(e(2, n + 1) - (n + 2)));
    case 2:
      return Rational(Integer(2 - 2 * e(3, n + 1) + e(4, n + 1) + n));
    case 3:
      return Rational(Integer(-2 - e(2, n + 1) * e(3, n + 2) + 3 * e(4, n + 1) + e(8, n + 1) - n));
    default:
      throw std::invalid_argument("lform_eulerian_uni: degree above 3 unsupported");
  }
}

}  // namespace eurcs
