#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace orthocover::cli {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNotCovering = 2;

/// One parsed command line. Unset optionals were not given.
struct RunSpec {
  std::string command;
  std::string format = "table";
  std::optional<std::string> family;
  std::optional<std::string> covering_case;
  std::optional<int> type;
  std::optional<double> a;
  std::optional<double> t;
  std::optional<double> p;
  std::optional<double> param;
  std::optional<double> x;
  std::optional<std::string> vary;
  std::optional<double> lo;
  std::optional<double> hi;
  std::optional<double> step;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  std::optional<int> grid;
  std::optional<double> tol;
  bool allow_nonextendable = false;

  /// 2 for the plane commands, 3 for space commands, 0 otherwise.
  int dimension() const;
  /// Canonical argument list; parse_run_spec(to_args()) == *this.
  std::vector<std::string> to_args() const;
  std::string to_text() const;

  friend bool operator==(const RunSpec&, const RunSpec&) = default;
};

/// Parses arguments (without the program name). Throws std::invalid_argument
/// with the parser's message on malformed input.
RunSpec parse_run_spec(const std::vector<std::string>& args);

/// Runs a command line; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int main_entry(int argc, char** argv);

}  // namespace orthocover::cli
