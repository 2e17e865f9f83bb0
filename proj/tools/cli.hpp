#ifndef DIAGCAT_TOOLS_CLI_HPP
#define DIAGCAT_TOOLS_CLI_HPP

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace diagcat::cli {

/// A parsed invocation: option values keyed by long name (without dashes),
/// boolean flags, and positional arguments in order.
struct Command {
  std::string subcommand;
  std::map<std::string, std::string> options;
  std::set<std::string> flags;
  std::vector<std::string> inputs;

  bool has(const std::string& flag) const { return flags.count(flag) != 0; }
  friend bool operator==(const Command&, const Command&) = default;
};

/// Thrown for malformed invocations; run() maps it to exit code 2.
struct UsageError {
  std::string message;
  int exit_code = 2; // 0 when help was requested
  std::string help;
};

Command parse_command(const std::vector<std::string>& args);

/// Canonical argument vector: subcommand, flags, then options, each sorted
/// by name, then positionals. parse_command(canonical_args(c)) == c.
std::vector<std::string> canonical_args(const Command& c);

/// canonical_args joined with POSIX shell quoting.
std::string to_string(const Command& c);

/// Executes a command. Exit codes: 0 success, 1 domain error or failed
/// verification, 2 usage error.
int run(const Command& c, std::ostream& out, std::ostream& err);

/// Parses and runs; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace diagcat::cli

#endif // DIAGCAT_TOOLS_CLI_HPP
