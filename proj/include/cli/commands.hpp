#pragma once

#include "cli/document.hpp"
#include "orbits/orbits.hpp"

#include <iostream>
#include <map>
#include <string>

namespace cli {

/// Exit codes shared by the commands (fixed for scriptability):
///   0 success / Equivalent
///   1 Distinct (compare only)
///   2 validation failure
///   3 I/O or parse error
///   4 Undecided (compare only)
enum ExitCode : int {
  kOk = 0,
  kDistinct = 1,
  kInvalid = 2,
  kParseError = 3,
  kUndecided = 4,
};

struct Options {
  std::string format = "text";  // "text" or "json"
  int search_budget = 12;       // R/L word length bound for orbit searches

  orbits::SearchBudget budget() const { return {search_budget, exactalg::Int(50)}; }
};

int cmd_validate(const std::string& path, const Options& opt, std::ostream& out,
                 std::ostream& err);
int cmd_invariants(const std::string& path, const Options& opt, std::ostream& out,
                   std::ostream& err);
int cmd_compare(const std::string& path_a, const std::string& path_b, const Options& opt,
                std::ostream& out, std::ostream& err);
int cmd_model(const std::string& args_path, const Options& opt, std::ostream& out,
              std::ostream& err);
int cmd_catalog(const std::string& name, const std::map<std::string, std::string>& params,
                const Options& opt, std::ostream& out, std::ostream& err);

/// Reads a whole file; "-" reads standard input.
std::string read_file(const std::string& path);

}  // namespace cli
