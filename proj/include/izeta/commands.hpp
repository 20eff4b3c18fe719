#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace izeta::cli {

inline constexpr const char* kSchema = "izeta/1";

enum ExitCode : int {
  kSuccess = 0,
  kAcceptanceFailure = 1,
  kUsageError = 2,
};

// Resolved flags for one command; unused fields keep their defaults.
struct RunConfig {
  std::string command;
  int n = 0;
  double rho = 0.0;
  double v = 0.0;
  std::vector<double> v_grid;
  std::uint64_t seed = 0;
  std::size_t replicas = 0;
  int k_max = 6;
  int bins = 50;
  int nodes = 128;
  int order = 30;
  std::string method = "eigen";
  std::string graph_file;
  std::string builtin;
  std::string out;
  std::string format = "json";
  unsigned threads = 1;
  bool timing = false;

  // Throws std::invalid_argument with a one-line message.
  void validate() const;
};

int cmd_moments(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_esd(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_zeta_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_xi(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv, runs the selected command and returns the process exit code.
// Reports go to `out` unless --out names a file; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace izeta::cli
