#ifndef PFK3_CLI_HPP
#define PFK3_CLI_HPP

#include <map>
#include <string>
#include <vector>

namespace pfk3::cli {

enum class Subcommand { classify, verify, dirac, smooth, gsig };
enum class Format { text, json, tsv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitBadInput = 2;

/// A validated command line: one subcommand plus the flags that were given
/// (keyed without leading dashes; boolean flags map to "true").
struct CommandRequest {
  Subcommand subcommand = Subcommand::classify;
  Format format = Format::text;
  std::map<std::string, std::string> options;
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string output;
  std::string diagnostic;  // one line for stderr, empty on success
};

/// Parses arguments (without the program name). Unknown flags and missing
/// or extra subcommands are rejected before any computation.
/// Returns a result instead of a request for --help and for parse errors.
struct ParseOutcome {
  bool ok = false;
  CommandRequest request;
  CommandResult early;  // help text or usage error when !ok
};
ParseOutcome parse_request(const std::vector<std::string>& args);

/// Executes a request. Output is a deterministic function of the request.
CommandResult run(const CommandRequest& request);

/// parse_request followed by run.
CommandResult run_command_line(const std::vector<std::string>& args);

}  // namespace pfk3::cli

#endif  // PFK3_CLI_HPP
