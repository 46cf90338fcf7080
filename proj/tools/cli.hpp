#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "eurcs/numeric.hpp"

namespace eurcs::cli {

enum class Command { Table, Verify, Ratios, Pencil, Root };
enum class Format { Csv, Json };

struct RunConfig {
  Command command = Command::Table;
  int n_min = 2;
  int n_max = 8;
  int n = 2;              // pencil / root target order
  Format format = Format::Csv;
  int digits = 9;
  int brute_force_cap = 8;
  int det_cap = 8;
  std::uint64_t seed = 1;
  bool pencil_univariate = false;
  bool pencil_full = false;  // didactic full-size pencil with the ghost row
};

inline const char* kArtifactVersion = "# eulerian-rcs-relaxation v1";

/// Executes the command, writing the artifact to `out` and diagnostics to
/// `err`. Returns the process exit status: 0 success, 1 verification
/// failure, 2 usage or resource errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace eurcs::cli
