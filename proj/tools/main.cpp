#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli.hpp"

namespace {

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  try {
    return std::stoi(v);
  } catch (...) {
    return fallback;
  }
}

}  // namespace

int main(int argc, char** argv) {
  using eurcs::cli::Command;
  using eurcs::cli::Format;
  eurcs::cli::RunConfig cfg;
  cfg.brute_force_cap = env_int("EURCS_BRUTE_FORCE_CAP", cfg.brute_force_cap);
  cfg.det_cap = env_int("EURCS_DET_CAP", cfg.det_cap);

  CLI::App app{"Spectrahedral relaxation of Eulerian polynomials: certified root bounds"};
  app.require_subcommand(1);
  std::string format = "csv";

  const auto add_common = [&](CLI::App* sub, bool range) {
    if (range) {
      sub->add_option("--n-min", cfg.n_min, "smallest order n");
      sub->add_option("--n-max", cfg.n_max, "largest order n");
    } else {
      sub->add_option("--n", cfg.n, "order n")->required();
    }
    sub->add_option("--digits", cfg.digits, "decimal output precision");
    sub->add_option("--format", format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--brute-force-cap", cfg.brute_force_cap, "enumeration cap (default 8)");
    sub->add_option("--det-cap", cfg.det_cap, "determinant-bound cap (default 8)");
    sub->add_option("--seed", cfg.seed, "seed for direction sampling");
  };

  CLI::App* table = app.add_subcommand("table", "bound table, one row per n");
  add_common(table, true);
  CLI::App* verify = app.add_subcommand("verify", "run the property suites");
  add_common(verify, true);
  CLI::App* ratios = app.add_subcommand("ratios", "asymptotic ratio diagnostics");
  add_common(ratios, true);
  CLI::App* pencil = app.add_subcommand("pencil", "dump the pencil as JSON");
  add_common(pencil, false);
  pencil->add_flag("--univariate", cfg.pencil_univariate, "2x2 univariate pencil");
  pencil->add_flag("--full", cfg.pencil_full, "full-size pencil with the ghost row");
  CLI::App* root = app.add_subcommand("root", "enclosure of the leftmost root of A_n");
  add_common(root, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (table->parsed()) cfg.command = Command::Table;
  if (verify->parsed()) cfg.command = Command::Verify;
  if (ratios->parsed()) cfg.command = Command::Ratios;
  if (pencil->parsed()) cfg.command = Command::Pencil;
  if (root->parsed()) cfg.command = Command::Root;
  cfg.format = (format == "json") ? Format::Json : Format::Csv;

  return eurcs::cli::run(cfg, std::cout, std::cerr);
}
