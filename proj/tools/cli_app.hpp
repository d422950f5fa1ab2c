#ifndef HAHN_TOOLS_CLI_APP_HPP
#define HAHN_TOOLS_CLI_APP_HPP

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hahn::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kSuccess = 0,
  kConfigError = 2,
  kDomainError = 3,
  kInvariantViolation = 4,
};

/// Raised for any invalid command-line configuration (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParamSet {
  double alpha;
  double beta;
};

struct RunConfig {
  std::string command;
  std::vector<ParamSet> param_sets;
  int N = 30;
  std::optional<int> m;
  std::vector<int> k{1, 2, 3};
  std::string fn = "sin-pi";
  double a = -1.0;
  double b = 1.0;
  int samples = 401;
  bool normalized = true;
  bool pointwise = false;
  std::string out;
  std::string plot_script;
};

/// Result of one command: the CSV text and the process exit code.
struct CommandResult {
  std::string text;
  int exit_code = kSuccess;
};

/// Throws ConfigError naming the offending field.
void validate(const RunConfig& config);

/// Truncation degree after command-specific defaults.
int effective_degree(const RunConfig& config);

CommandResult cmd_weights(const RunConfig& config);
CommandResult cmd_eval(const RunConfig& config);
CommandResult cmd_project(const RunConfig& config);
CommandResult cmd_decay(const RunConfig& config);
CommandResult cmd_runge(const RunConfig& config);
CommandResult cmd_compare_legendre(const RunConfig& config);
CommandResult cmd_verify(const RunConfig& config);

/// Validates and dispatches on config.command. Numeric failures of the
/// library are mapped to kDomainError.
CommandResult run(const RunConfig& config);

/// Full command line handling: parsing, dispatch, writing --out. Returns the
/// exit code; nothing is written to --out unless the command produced data.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "a,b;c,d" -> {{a,b},{c,d}}.
std::vector<ParamSet> parse_param_sets(const std::string& text);
std::pair<double, double> parse_interval(const std::string& text);

}  // namespace hahn::cli

#endif  // HAHN_TOOLS_CLI_APP_HPP
