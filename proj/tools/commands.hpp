#pragma once

#include "report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace spw::cli {

enum ExitCode : int { kOk = 0, kInvariantFailed = 1, kConjectureMismatch = 2, kUsage = 64 };

struct RunConfig {
  int q = 3;
  int n = 2;
  int k = 1;
  std::string beta_type = "plus";
  int central_char_a = 1;
  uint64_t seed = 0;
  int thread_count = 1;
  uint64_t enumeration_limit = 200000;
  int samples = 100;
  std::string output_format = "csv";
  std::string output_path;  // directory; empty means stdout
};

struct Outcome {
  std::vector<Table> tables;
  std::vector<std::string> failures;
  std::vector<std::string> warnings;

  int exit_code() const;
  void merge(Outcome o);
};

/// Throws std::invalid_argument for a config the subcommand cannot use.
void validate(const std::string& subcommand, const RunConfig& cfg);

Outcome run_forms(const RunConfig& cfg);
Outcome run_heisenberg(const RunConfig& cfg);
Outcome run_weil(const RunConfig& cfg);
Outcome run_rank_table(const RunConfig& cfg);
Outcome run_eta(const RunConfig& cfg);
Outcome run_ore(const RunConfig& cfg);
Outcome run_all(const RunConfig& cfg);

Outcome dispatch(const std::string& subcommand, const RunConfig& cfg);

Header report_header(const std::string& subcommand, const RunConfig& cfg);

/// Validates, runs, writes the tables and returns the exit code.
int run(const std::string& subcommand, const RunConfig& cfg);

}  // namespace spw::cli
