#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace hop {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitCheckFailed = 2;

struct RunConfig {
  std::string command; // check ground wfs perfect stratify extcheck minimal demo
  std::string input;   // path, or "-" for stdin
  std::string demo;    // demo name for `demo`
  std::size_t depth = 3;
  std::vector<std::string> roots;
  std::string format = "json"; // json | text
  std::size_t oracle_limit = 12;
  std::size_t budget = 0;        // 0: default for the depth
  std::string model = "wfs";     // extcheck: wfs | perfect
  std::string ordering = "fitting"; // minimal: fitting | truth
  bool parallel = false;
  bool trace = false;
};

/// Runs one pipeline. Exit codes: 0 success, 2 a check failed (for example
/// non-extensional or unstratifiable), 1 usage, I/O or program errors.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

/// Parses command-line arguments into a RunConfig and runs it.
int run_cli(int argc, const char *const *argv, std::ostream &out,
            std::ostream &err);

} // namespace hop
