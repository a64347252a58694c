#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "skewfree/poly.hpp"

namespace skewfree::cli {

enum ExitCode : int { kVerified = 0, kRefuted = 1, kInconclusive = 2, kInputError = 3 };

struct RunConfig {
  std::string command;  // classify, check-free, certify, verify-relation, dims,
                        // henon-degrees, growth, parity
  std::string sigma_spec;
  std::string matrix_spec;
  std::vector<std::string> generator_specs;
  int depth = 8;
  int power = 1;
  int horizon = 8;
  int N = 20;
  std::string weights = "2,1";
  std::string relation;
  std::string route = "auto";  // auto, rank, sumset
  bool graded = false;
  Mode mode = Mode::Poly;  // for custom and identity automorphisms
  bool json = true;
  std::optional<std::size_t> max_entries;
};

struct RunResult {
  int exit_code = kVerified;
  std::string output;      // the report
  std::string diagnostic;  // for standard error
};

RunResult run(const RunConfig& config);

/// Parses flags, runs, and writes the report and diagnostics.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace skewfree::cli
