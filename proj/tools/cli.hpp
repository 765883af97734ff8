#pragma once

// Command-line front end. Exit codes: 0 yes / success, 1 no, 2 usage or limits.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ncca/automaton.hpp"

namespace ncca::cli {

enum ExitCode : int { kYes = 0, kNo = 1, kUsage = 2 };

struct CliConfig {
  std::string subcommand;
  RuleVector rules;
  std::string init;
  int n = 0;
  std::uint64_t seed = 0;
  int steps = 1;
  int count = 1;
  unsigned jobs = 0;
  int max_cells = 24;
  double budget = 5e9;
  bool prune = false;
  bool trace = false;
  std::string format;
  std::string choices_file;
  std::string alphabet;
};

struct ParseResult {
  std::optional<CliConfig> config;
  /// Meaningful when config is empty (help printed or parse error).
  int exit_code = kUsage;
};

/// `args` excludes the program name.
ParseResult parse_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int execute(const CliConfig& config, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncca::cli
