#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "eurcs/bounds.hpp"
#include "eurcs/counting.hpp"
#include "eurcs/lform.hpp"
#include "eurcs/oracle.hpp"
#include "eurcs/pencil.hpp"
#include "eurcs/perms.hpp"

namespace eurcs::cli {

namespace {

void validate(const RunConfig& c) {
  if (c.n_min > c.n_max) throw std::invalid_argument("n-min must not exceed n-max");
  if (c.digits < 1) throw std::invalid_argument("digits must be >= 1");
  if (c.brute_force_cap < 1 || c.det_cap < 1) throw std::invalid_argument("caps must be >= 1");
  if (c.n < 1) throw std::invalid_argument("n must be >= 1");
  if (c.n_min < 1) throw std::invalid_argument("n-min must be >= 1");
}

/// Certified decimal of an interval quantity: nearest rounding of the
/// midpoint; the interval must already be narrower than half an ulp so the
/// printed value is within one ulp of the enclosed exact value.
std::string cell_interval_mid(const DyadicInterval& iv, int digits) {
  const Rational half = pow_rat(Rational(10), -digits) / 2;
  if (iv.width() > half)
    throw std::logic_error("cell_interval_mid: interval too wide for the digit count");
  const Rational shifted(iv.mid() + half);
  return decimal_string(shifted, digits, RoundMode::Down);
}

std::string table_flags(const BoundReport& r) {
  std::vector<std::string> toks;
  if (r.un_degenerate) toks.push_back("un_degenerate");
  if (!r.mult_valid) toks.push_back("mult_invalid");
  if (r.mult_det) toks.push_back(r.mult_det_ge_un ? "mult_det_ge_un" : "mult_det_lt_un");
  std::string s;
  for (size_t i = 0; i < toks.size(); ++i) s += (i ? "|" : "") + toks[i];
  return s;
}

struct TableRow {
  int n;
  std::vector<std::pair<std::string, std::string>> cells;  // column -> text
};

TableRow table_row(const BoundReport& r, int digits) {
  // Lower bounds round down, upper bounds round up: printed tables must
  // never show an invalid bound.
  const auto down = [digits](const auto& v) { return decimal_string(v, digits, RoundMode::Down); };
  const auto up = [digits](const auto& v) { return decimal_string(v, digits, RoundMode::Up); };
  TableRow row;
  row.n = r.n;
  row.cells.emplace_back("n", std::to_string(r.n));
  row.cells.emplace_back("colucci", down(r.colucci));
  row.cells.emplace_back("b11", down(r.b11));
  row.cells.emplace_back("un", r.un ? down(*r.un) : "");
  row.cells.emplace_back("y_star", r.y_star ? down(*r.y_star) : "");
  row.cells.emplace_back("mult_v", r.mult_v ? down(*r.mult_v) : "");
  std::string md;
  if (r.mult_det)
    md = r.mult_det->exact ? down(*r.mult_det->value)
                           : down(r.mult_det->enclosure.lo);
  row.cells.emplace_back("mult_det", md);
  row.cells.emplace_back("oracle_lo", down(r.oracle_abs.lo));
  row.cells.emplace_back("oracle_hi", up(r.oracle_abs.hi));
  row.cells.emplace_back("laguerre_upper", r.laguerre ? up(*r.laguerre) : "");
  row.cells.emplace_back("flags", table_flags(r));
  return row;
}

void emit_rows(const std::vector<TableRow>& rows, Format format, std::ostream& out) {
  if (format == Format::Csv) {
    out << kArtifactVersion << "\n";
    if (!rows.empty()) {
      for (size_t i = 0; i < rows[0].cells.size(); ++i)
        out << (i ? "," : "") << rows[0].cells[i].first;
      out << "\n";
    }
    for (const TableRow& r : rows) {
      for (size_t i = 0; i < r.cells.size(); ++i) out << (i ? "," : "") << r.cells[i].second;
      out << "\n";
    }
    return;
  }
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const TableRow& r : rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.cells) obj[k] = v;
    j.push_back(std::move(obj));
  }
  out << j.dump(2) << "\n";
}

int run_table(const RunConfig& c, std::ostream& out) {
  std::vector<TableRow> rows;
  for (int n = c.n_min; n <= c.n_max; ++n)
    rows.push_back(table_row(bound_report(n, c.det_cap), c.digits));
  emit_rows(rows, c.format, out);
  return 0;
}

int run_ratios(const RunConfig& c, std::ostream& out) {
  const Rational width = std::min(pow2(-48), Rational(pow_rat(Rational(10), -c.digits) / 4));
  const auto diag = ratio_diagnostics(std::max(2, c.n_min), c.n_max, width);
  std::vector<TableRow> rows;
  for (const RatioRow& r : diag) {
    TableRow row;
    row.n = r.n;
    row.cells.emplace_back("n", std::to_string(r.n));
    row.cells.emplace_back("un_ratio", cell_interval_mid(r.un_ratio, c.digits));
    row.cells.emplace_back("b11_ratio", cell_interval_mid(r.b11_ratio, c.digits));
    row.cells.emplace_back("scaled_diff", cell_interval_mid(r.scaled_diff, c.digits));
    rows.push_back(std::move(row));
  }
  emit_rows(rows, c.format, out);
  return 0;
}

int run_pencil(const RunConfig& c, std::ostream& out) {
  const Pencil p = c.pencil_univariate ? univariate_pencil(c.n)
                                       : eulerian_pencil(c.n, c.pencil_full);
  out << pencil_to_json(p);
  return 0;
}

int run_root(const RunConfig& c, std::ostream& out) {
  const RootInterval iv = extreme_root(c.n, default_root_width());
  out << "[" << decimal_string(iv.lo, c.digits, RoundMode::Down) << ", "
      << decimal_string(iv.hi, c.digits, RoundMode::Up) << "]\n";
  return 0;
}

// ---- verification suites ----------------------------------------------

bool suite_combinatorics(const RunConfig& c) {
  const int cap = std::min({c.n_max, c.brute_force_cap, 8});
  for (int n = 1; n <= cap; ++n) {
    std::vector<Integer> layer_sums(4, Integer(0));
    std::vector<std::vector<int>> subsets{{}};
    for (int i = 2; i <= n + 1; ++i) {
      const size_t sz = subsets.size();
      for (size_t s = 0; s < sz; ++s)
        if (subsets[s].size() < 3) {
          auto copy = subsets[s];
          copy.push_back(i);
          subsets.push_back(std::move(copy));
        }
    }
    for (const auto& X : subsets) {
      const Integer closed = r_count(n, X, RCountStrategy::ClosedForm);
      if (closed != r_count(n, X, RCountStrategy::InclusionExclusionAlpha)) return false;
      if (closed != r_count(n, X, RCountStrategy::InclusionExclusionPFull)) return false;
      if (closed != r_count(n, X, RCountStrategy::BruteForce, c.brute_force_cap)) return false;
      layer_sums[X.size()] += closed;
    }
    for (int k = 0; k <= std::min(n, 3); ++k)
      if (layer_sums[static_cast<size_t>(k)] != eulerian_number(n, k)) return false;
  }
  // Hall-Remmel: both expressions agree; the disambiguation value stays 4.
  for (int m = 1; m <= 9; ++m) {
    std::vector<std::vector<int>> subsets{{}};
    for (int i = 1; i <= m; ++i) {
      const size_t sz = subsets.size();
      for (size_t s = 0; s < sz; ++s)
        if (subsets[s].size() < 3) {
          auto copy = subsets[s];
          copy.push_back(i);
          subsets.push_back(std::move(copy));
        }
    }
    for (const auto& X : subsets)
      for (int s = 0; s <= static_cast<int>(X.size()); ++s) {
        const DescentQuery q{m, X, s};
        if (p_exact(q, PExactForm::First) != p_exact(q, PExactForm::Second)) return false;
      }
  }
  return p_exact({3, {2, 3}, 1}, PExactForm::First) == 4;
}

bool suite_lform(const RunConfig& c) {
  for (int n = 1; n <= std::min({c.n_max, c.brute_force_cap, 8}); ++n) {
    const auto t = trunc3_from_multipoly(eulerian_bruteforce_cached(n, c.brute_force_cap));
    const auto table = lform_series_table(t);
    for (const auto& [m, val] : table)
      if (lform_eulerian_multi(n, m) != val) return false;
  }
  for (int n = 1; n <= 25; ++n) {
    const auto t = trunc3_from_unipoly(UniPoly::from_integers(eulerian_poly(n)));
    for (int k = 0; k <= 3; ++k) {
      Monomial3 m = Monomial3::unit();
      if (k == 1) m = Monomial3::var(1);
      if (k == 2) m = Monomial3::of(1, 1);
      if (k == 3) m = Monomial3::of(1, 1, 1);
      if (lform_eulerian_uni(n, k) != lform_series(t, m)) return false;
    }
  }
  return lform_eulerian_multi(2, Monomial3::of(2, 2, 3)) == Rational(2);
}

bool suite_psd(const RunConfig& c) {
  for (int n = 1; n <= c.n_max; ++n)
    if (!psd(eulerian_pencil(n).constant)) return false;
  return true;
}

bool suite_chain(const RunConfig& c) {
  for (int n = 2; n <= std::min(c.n_max, 30); ++n) {
    const BoundReport r = bound_report(n, c.det_cap);  // orderings enforced inside
    if (r.colucci >= r.b11) return false;
  }
  return true;
}

bool suite_compression(const RunConfig& c) {
  const std::vector<Rational> as{Rational(-1), Rational(0), make_rational(1, 2), Rational(1),
                                 Rational(7)};
  for (int n = 1; n <= std::min(c.n_max, 20); ++n) {
    const DiagonalPencil multi = diagonal(eulerian_pencil(n));
    const DiagonalPencil uni = diagonal(univariate_pencil(n));
    for (const Rational& a : as) {
      std::vector<Rational> v(static_cast<size_t>(n) + 1, Rational(1));
      v[0] = a;
      if (multi.m0.quadratic_form(v) != uni.m0.quadratic_form({a, Rational(1)})) return false;
      if (multi.msigma.quadratic_form(v) != uni.msigma.quadratic_form({a, Rational(1)}))
        return false;
    }
  }
  return true;
}

bool suite_rz(const RunConfig& c) {
  std::mt19937_64 rng(c.seed);
  for (int n = 1; n <= std::min({c.n_max, c.brute_force_cap, 6}); ++n)
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Rational> dir;
      dir.reserve(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) {
        const long den = 1 + static_cast<long>(rng() % 12);
        const long num = static_cast<long>(rng() % static_cast<unsigned long>(4 * den + 1)) - 2 * den;
        dir.push_back(make_rational(num, den));
      }
      if (!rz_direction_check(n, dir, c.brute_force_cap).real_rooted) return false;
    }
  return true;
}

int run_verify(const RunConfig& c, std::ostream& out) {
  const std::vector<std::pair<std::string, std::function<bool(const RunConfig&)>>> suites{
      {"combinatorics", suite_combinatorics}, {"lform", suite_lform},
      {"psd", suite_psd},                     {"chain", suite_chain},
      {"compression", suite_compression},     {"rz_sampling", suite_rz},
  };
  bool all_ok = true;
  for (const auto& [name, fn] : suites) {
    const bool ok = fn(c);
    all_ok = all_ok && ok;
    out << name << ": " << (ok ? "PASS" : "FAIL") << "\n";
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    switch (config.command) {
      case Command::Table:
        return run_table(config, out);
      case Command::Verify:
        return run_verify(config, out);
      case Command::Ratios:
        return run_ratios(config, out);
      case Command::Pencil:
        return run_pencil(config, out);
      case Command::Root:
        return run_root(config, out);
    }
    err << "error: unknown command\n";
    return 2;
  } catch (const resource_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace eurcs::cli
