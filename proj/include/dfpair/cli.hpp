#ifndef DFPAIR_CLI_HPP
#define DFPAIR_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dfpair::cli
{

enum ExitCode : int
{
  ok = 0,
  usage_error = 1,
  incomplete = 2,
  internal_failure = 3
};

/// Runs `dfpair <subcommand> ...`. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dfpair::cli

#endif
