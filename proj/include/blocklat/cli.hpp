#ifndef BLOCKLAT_CLI_HPP
#define BLOCKLAT_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace blocklat
{

inline constexpr char const *json_schema = "blocklat/1";

enum ExitCode : int
{
  exit_ok = 0,
  exit_failed = 1,
  exit_usage = 2
};

// Runs the command line `args` (without the program name). The order cap
// defaults to BLOCKLAT_ORDER_CAP when set, and --cap overrides both.
int run_cli(std::vector<std::string> const &args, std::ostream &out,
            std::ostream &err);

} // namespace blocklat

#endif // BLOCKLAT_CLI_HPP
