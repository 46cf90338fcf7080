#include "eurcs/pencil.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

#include "eurcs/counting.hpp"

namespace eurcs {

Trunc3Polynomial trunc3_eulerian(int n) {
  if (n < 1) throw std::invalid_argument("trunc3_eulerian: n >= 1 required");
  Trunc3Polynomial t;
  t.deg = n;
  for (int i = 2; i <= n + 1; ++i) t.vars.push_back(i);
  for (int i = 2; i <= n + 1; ++i) {
    t.coeff[Monomial3::var(i)] = Rational(r_count(n, {i}));
    for (int j = i + 1; j <= n + 1; ++j) {
      t.coeff[Monomial3::of(i, j)] = Rational(r_count(n, {i, j}));
      for (int k = j + 1; k <= n + 1; ++k)
        t.coeff[Monomial3::of(i, j, k)] = Rational(r_count(n, {i, j, k}));
    }
  }
  return t;
}

namespace {

std::vector<Monomial3> row_monomials(const std::vector<int>& vars) {
  std::vector<Monomial3> rows{Monomial3::unit()};
  for (int v : vars) rows.push_back(Monomial3::var(v));
  return rows;
}

std::string var_label(int tag, bool univariate) {
  return univariate ? "x" : "x" + std::to_string(tag);
}

}  // namespace

Pencil build_pencil(const Trunc3Polynomial& t) {
  const auto table = lform_series_table(t);
  const auto L = [&table](const Monomial3& m) {
    const auto it = table.find(m);
    return it == table.end() ? Rational(0) : it->second;
  };
  const bool univariate = t.vars.size() == 1 && t.vars[0] == 1;
  const auto rows = row_monomials(t.vars);
  const int sz = static_cast<int>(rows.size());
  Pencil p;
  p.n = t.deg;
  p.labels.push_back("1");
  for (int v : t.vars) p.labels.push_back(var_label(v, univariate));
  p.constant = QMatrix(sz);
  for (int u = 0; u < sz; ++u)
    for (int w = 0; w < sz; ++w)
      p.constant.at(u, w) = L(rows[static_cast<size_t>(u)] * rows[static_cast<size_t>(w)]);
  for (int v : t.vars) {
    QMatrix a(sz);
    const Monomial3 xv = Monomial3::var(v);
    for (int u = 0; u < sz; ++u)
      for (int w = 0; w < sz; ++w)
        a.at(u, w) = L(rows[static_cast<size_t>(u)] * rows[static_cast<size_t>(w)] * xv);
    p.coeffs.emplace_back(var_label(v, univariate), std::move(a));
  }
  return p;
}

Pencil eulerian_pencil(int n, bool include_ghost) {
  if (n < 1) throw std::invalid_argument("eulerian_pencil: n >= 1 required");
  std::vector<int> vars;
  for (int i = 2; i <= n + 1; ++i) vars.push_back(i);
  const auto rows = row_monomials(vars);
  const int sz = static_cast<int>(rows.size());
  Pencil p;
  p.n = n;
  p.labels.push_back("1");
  for (int v : vars) p.labels.push_back(var_label(v, false));
  p.constant = QMatrix(sz);
  for (int u = 0; u < sz; ++u)
    for (int w = u; w < sz; ++w) {
      Rational val = lform_eulerian_multi(n, rows[static_cast<size_t>(u)] * rows[static_cast<size_t>(w)]);
      p.constant.at(u, w) = val;
      p.constant.at(w, u) = std::move(val);
    }
  for (int v : vars) {
    QMatrix a(sz);
    const Monomial3 xv = Monomial3::var(v);
    for (int u = 0; u < sz; ++u)
      for (int w = u; w < sz; ++w) {
        Rational val =
            lform_eulerian_multi(n, rows[static_cast<size_t>(u)] * rows[static_cast<size_t>(w)] * xv);
        a.at(u, w) = val;
        a.at(w, u) = std::move(val);
      }
    p.coeffs.emplace_back(var_label(v, false), std::move(a));
  }
  if (!include_ghost) return p;
  // Didactic full-size form: insert the x_1 row/column (all zero off the
  // copied block) and the identically zero coefficient matrix for x_1.
  Pencil full;
  full.n = n;
  full.labels = {"1", "x1"};
  for (int v : vars) full.labels.push_back(var_label(v, false));
  const auto embed = [sz](const QMatrix& src) {
    QMatrix dst(sz + 1);
    for (int u = 0; u < sz; ++u)
      for (int w = 0; w < sz; ++w)
        dst.at(u < 1 ? u : u + 1, w < 1 ? w : w + 1) = src.at(u, w);
    return dst;
  };
  full.constant = embed(p.constant);
  full.coeffs.emplace_back("x1", QMatrix(sz + 1));
  for (const auto& [label, a] : p.coeffs) full.coeffs.emplace_back(label, embed(a));
  return full;
}

Pencil univariate_pencil(int n) {
  if (n < 1) throw std::invalid_argument("univariate_pencil: n >= 1 required");
  Pencil p;
  p.n = n;
  p.labels = {"1", "x"};
  p.constant = QMatrix(2);
  QMatrix a1(2);
  const Rational l0 = lform_eulerian_uni(n, 0), l1 = lform_eulerian_uni(n, 1),
                 l2 = lform_eulerian_uni(n, 2), l3 = lform_eulerian_uni(n, 3);
  p.constant.at(0, 0) = l0;
  p.constant.at(0, 1) = l1;
  p.constant.at(1, 0) = l1;
  p.constant.at(1, 1) = l2;
  a1.at(0, 0) = l1;
  a1.at(0, 1) = l2;
  a1.at(1, 0) = l2;
  a1.at(1, 1) = l3;
  p.coeffs.emplace_back("x", std::move(a1));
  return p;
}

DiagonalPencil diagonal(const Pencil& p) {
  DiagonalPencil d;
  d.m0 = p.constant;
  d.msigma = QMatrix(p.size());
  for (const auto& [label, a] : p.coeffs) d.msigma = d.msigma + a;
  return d;
}

QMatrix evaluate(const Pencil& p, const std::vector<Rational>& point) {
  if (point.size() != p.coeffs.size())
    throw std::invalid_argument("evaluate: point length must match the variable count");
  QMatrix m = p.constant;
  for (size_t k = 0; k < point.size(); ++k)
    m = m + point[k] * p.coeffs[k].second;
  return m;
}

bool membership(const Pencil& p, const std::vector<Rational>& point) {
  return psd(evaluate(p, point));
}

int default_det_size_cap() { return 12; }

UniPoly det_diagonal_poly(const DiagonalPencil& d, int size_cap) {
  const int n = d.m0.size();
  if (d.msigma.size() != n) throw std::invalid_argument("det_diagonal_poly: size mismatch");
  if (n > size_cap)
    throw resource_error("det_diagonal_poly: size " + std::to_string(n) +
                         " exceeds the cap " + std::to_string(size_cap));
  if (n == 0) return UniPoly::constant(Rational(1));
  // Bareiss elimination over Q[x]; every division is exact.
  std::vector<std::vector<UniPoly>> b(static_cast<size_t>(n), std::vector<UniPoly>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      b[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          UniPoly({d.m0.at(i, j), d.msigma.at(i, j)});
  int sign = 1;
  UniPoly prev = UniPoly::constant(Rational(1));
  for (int k = 0; k + 1 < n; ++k) {
    if (b[static_cast<size_t>(k)][static_cast<size_t>(k)].is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (!b[static_cast<size_t>(i)][static_cast<size_t>(k)].is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return UniPoly();  // zero column: determinant vanishes
      std::swap(b[static_cast<size_t>(k)], b[static_cast<size_t>(swap_row)]);
      sign = -sign;
    }
    const UniPoly pivot = b[static_cast<size_t>(k)][static_cast<size_t>(k)];
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        UniPoly num = b[static_cast<size_t>(i)][static_cast<size_t>(j)] * pivot -
                      b[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                          b[static_cast<size_t>(k)][static_cast<size_t>(j)];
        b[static_cast<size_t>(i)][static_cast<size_t>(j)] = UniPoly::exact_div(num, prev);
      }
      b[static_cast<size_t>(i)][static_cast<size_t>(k)] = UniPoly();
    }
    prev = pivot;
  }
  UniPoly det = b[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
  return sign == 1 ? det : Rational(-1) * det;
}

std::string pencil_to_json(const Pencil& p) {
  nlohmann::ordered_json j;
  j["n"] = p.n;
  j["labels"] = p.labels;
  const auto matrix_json = [](const QMatrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < m.size(); ++i) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (int k = 0; k < m.size(); ++k) row.push_back(to_string(m.at(i, k)));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  j["A0"] = matrix_json(p.constant);
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
  for (const auto& [label, a] : p.coeffs) coeffs[label] = matrix_json(a);
  j["coeffs"] = std::move(coeffs);
  return j.dump(2) + "\n";
}

Pencil pencil_from_json(const std::string& text) {
  const auto j = nlohmann::ordered_json::parse(text);
  Pencil p;
  p.n = j.at("n").get<int>();
  p.labels = j.at("labels").get<std::vector<std::string>>();
  const auto matrix_from = [](const nlohmann::ordered_json& rows) {
    const int sz = static_cast<int>(rows.size());
    QMatrix m(sz);
    for (int i = 0; i < sz; ++i) {
      const auto& row = rows.at(static_cast<size_t>(i));
      if (static_cast<int>(row.size()) != sz)
        throw std::invalid_argument("pencil_from_json: ragged matrix");
      for (int k = 0; k < sz; ++k)
        m.at(i, k) = parse_rational(row.at(static_cast<size_t>(k)).get<std::string>());
    }
    return m;
  };
  p.constant = matrix_from(j.at("A0"));
  for (const auto& [label, rows] : j.at("coeffs").items())
    p.coeffs.emplace_back(label, matrix_from(rows));
  return p;
}

}  // namespace eurcs
