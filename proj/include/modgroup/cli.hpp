#pragma once

// Command-line front end. Reports are deterministic: identical commands give
// byte-identical output.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace modgroup::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kCeiling = 3 };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Command {
  // index | table | decompose | rank | stabilizer | abelianize | verify | satoh
  std::string subcommand;
  std::string claim;  // verify only
  std::optional<long> m;
  std::optional<long> n;  // defaults to 1 when only m is given
  std::optional<std::string> group;
  std::string method;  // hall | full | image; empty picks a default
  bool json = false;
  std::size_t ceiling = 1'000'000;
  std::uint64_t seed = 20240229;
  std::optional<long> max_m;
};

struct Report {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

// Parses argv (argv[0] is the program name). Throws UsageError; a help
// request yields a Command whose subcommand is "help" and the help text in
// claim.
Command parse_command(int argc, const char* const* argv);

std::vector<std::string> verify_claims();

Report run(const Command& command);

}  // namespace modgroup::cli
