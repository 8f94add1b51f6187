#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qmod::cli {

inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

/// Bad command line. what() is the diagnostic; exit_code is 0 for --help.
class UsageError : public std::runtime_error {
 public:
  UsageError(const std::string& message, int exit_code = kExitError)
      : std::runtime_error(message), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

struct Command {
  std::string subcommand;

  // Quiver input: exactly one of these for quiver subcommands.
  std::optional<std::string> preset;  // "kronecker:3", "cyclic:4", "bipartite:2:3"
  std::optional<std::string> quiver_file;

  std::optional<std::vector<int>> alpha;
  std::optional<std::vector<int>> theta;
  std::vector<std::pair<int, std::vector<int>>> parts;  // local-quiver: (m, β)
  int max_total = 0;

  // torus-knot, gamma, oracle-knot
  int p = 0;
  int q = 0;
  std::vector<int> a;
  std::vector<int> b;
  bool show_gamma = false;

  // oracles
  std::optional<std::uint64_t> modulus;
  std::uint64_t seed = 0;
  int trials = 20;
  int max_dim = 8;

  std::size_t budget = 1'000'000;
  bool json = false;
};

/// args excludes the program name.
Command parse_args(const std::vector<std::string>& args);

struct RunResult {
  int exit_code = kExitYes;
  std::string out;
  std::string err;
};

RunResult run(const Command& cmd);

/// parse_args + run with usage errors folded into the result.
RunResult main_entry(const std::vector<std::string>& args);

/// Parses "1,-2,3"; throws UsageError on anything else.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace qmod::cli
