#include <doctest.h>

#include <sstream>
#include <vector>

#include "cli.hpp"
#include "eurcs/bounds.hpp"
#include "eurcs/pencil.hpp"

using namespace eurcs;
using cli::Command;
using cli::Format;
using cli::RunConfig;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run_cli(const RunConfig& cfg) {
  std::ostringstream out, err;
  const int status = cli::run(cfg, out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_csv(const std::string& row) {
  std::vector<std::string> cells;
  std::string cur;
  for (char c : row) {
    if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  cells.push_back(cur);
  return cells;
}

}  // namespace

TEST_CASE("table emits the versioned CSV with valid rounded bounds") {
  RunConfig cfg;
  cfg.command = Command::Table;
  cfg.n_min = 2;
  cfg.n_max = 5;
  cfg.digits = 7;
  const Result r = run_cli(cfg);
  REQUIRE(r.status == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 6);  // version, header, 4 rows
  CHECK(lines[0] == "# eulerian-rcs-relaxation v1");
  CHECK(lines[1] ==
        "n,colucci,b11,un,y_star,mult_v,mult_det,oracle_lo,oracle_hi,laguerre_upper,flags");
  const auto row2 = split_csv(lines[2]);
  CHECK(row2[0] == "2");
  CHECK(row2[3] == "3.7320508");  // un rounded down
  CHECK(row2[5] == "3.4142135");  // mult_v rounded down
  CHECK(row2[9] == "3.7320509");  // upper bound rounded up
}

TEST_CASE("the degenerate n = 1 row still renders with its flags") {
  RunConfig cfg;
  cfg.command = Command::Table;
  cfg.n_min = 1;
  cfg.n_max = 1;
  cfg.digits = 3;
  const Result r = run_cli(cfg);
  REQUIRE(r.status == 0);
  const auto cells = split_csv(lines_of(r.out)[2]);
  CHECK(cells[0] == "1");
  CHECK(cells[1] == "1.000");  // colucci
  CHECK(cells[2] == "1.000");  // b11
  CHECK(cells[3].empty());     // un degenerate
  CHECK(cells[4].empty());     // y_star absent
  CHECK(cells[5].empty());     // mult_v absent
  CHECK(cells[9].empty());     // laguerre needs n >= 2
  CHECK(cells[10] == "un_degenerate|mult_invalid");
}

TEST_CASE("CSV decimals re-read as one-ulp intervals contain the exact values") {
  RunConfig cfg;
  cfg.command = Command::Table;
  cfg.n_min = 2;
  cfg.n_max = 4;
  cfg.digits = 9;
  const Result r = run_cli(cfg);
  REQUIRE(r.status == 0);
  const Rational ulp = pow_rat(Rational(10), -9);
  const auto lines = lines_of(r.out);
  for (size_t i = 2; i < lines.size(); ++i) {
    const auto cells = split_csv(lines[i]);
    const int n = std::stoi(cells[0]);
    const auto cell_value = [&cells](size_t idx) {
      const std::string& s = cells[idx];
      const size_t dot = s.find('.');
      const std::string digits_only = s.substr(0, dot) + s.substr(dot + 1);
      const int frac = static_cast<int>(s.size() - dot - 1);
      return Rational(parse_rational(digits_only) * pow_rat(Rational(10), -frac));
    };
    const RadicalExpr un = *un_bound(n).value;
    const Rational printed = cell_value(3);
    CHECK(compare(un, RadicalExpr(Rational(printed - ulp))) >= 0);
    CHECK(compare(un, RadicalExpr(Rational(printed + ulp))) <= 0);
    const Rational b11 = b11_bound(n);
    CHECK(abs(Rational(cell_value(2) - b11)) <= ulp);
  }
}

TEST_CASE("identical configuration produces byte-identical artifacts") {
  for (Command cmd : {Command::Table, Command::Ratios, Command::Verify}) {
    RunConfig cfg;
    cfg.command = cmd;
    cfg.n_min = 2;
    cfg.n_max = 4;
    cfg.seed = 42;
    const Result a = run_cli(cfg);
    const Result b = run_cli(cfg);
    CHECK(a.status == b.status);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("verify prints one line per suite and exits zero") {
  RunConfig cfg;
  cfg.command = Command::Verify;
  cfg.n_max = 5;
  const Result r = run_cli(cfg);
  CHECK(r.status == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 6);
  for (const auto& line : lines) CHECK(line.find(": PASS") != std::string::npos);
}

TEST_CASE("ratios table in json format") {
  RunConfig cfg;
  cfg.command = Command::Ratios;
  cfg.n_min = 2;
  cfg.n_max = 3;
  cfg.format = Format::Json;
  cfg.digits = 10;
  const Result r = run_cli(cfg);
  REQUIRE(r.status == 0);
  CHECK(r.out.find("\"un_ratio\": \"0.4665063509\"") != std::string::npos);
  CHECK(r.out.find("\"scaled_diff\"") != std::string::npos);
}

TEST_CASE("pencil dump round-trips") {
  RunConfig cfg;
  cfg.command = Command::Pencil;
  cfg.n = 2;
  const Result r = run_cli(cfg);
  REQUIRE(r.status == 0);
  const Pencil p = pencil_from_json(r.out);
  CHECK(p.n == 2);
  CHECK(p.constant.at(2, 2) == Rational(9));

  cfg.pencil_univariate = true;
  const Result uni = run_cli(cfg);
  CHECK(pencil_from_json(uni.out).labels == std::vector<std::string>{"1", "x"});

  cfg.pencil_univariate = false;
  cfg.pencil_full = true;
  const Result full = run_cli(cfg);
  CHECK(pencil_from_json(full.out).labels ==
        std::vector<std::string>{"1", "x1", "x2", "x3"});
}

TEST_CASE("root enclosure rendering") {
  RunConfig cfg;
  cfg.command = Command::Root;
  cfg.n = 3;
  cfg.digits = 7;
  const Result r = run_cli(cfg);
  REQUIRE(r.status == 0);
  CHECK(r.out == "[-9.8989795, -9.8989794]\n");
  cfg.n = 1;
  CHECK(run_cli(cfg).out == "[-1.0000001, -0.9999999]\n");
}

TEST_CASE("usage and resource errors exit with status 2") {
  RunConfig bad;
  bad.command = Command::Table;
  bad.n_min = 5;
  bad.n_max = 2;
  CHECK(run_cli(bad).status == 2);

  RunConfig zero_digits;
  zero_digits.command = Command::Root;
  zero_digits.n = 2;
  zero_digits.digits = 0;
  CHECK(run_cli(zero_digits).status == 2);

  // Raising the det cap beyond the determinant size cap trips the resource
  // guard inside mult_det_bound.
  RunConfig too_big;
  too_big.command = Command::Table;
  too_big.n_min = 13;
  too_big.n_max = 13;
  too_big.det_cap = 13;
  const Result r = run_cli(too_big);
  CHECK(r.status == 2);
  CHECK(r.err.find("error") != std::string::npos);
}
