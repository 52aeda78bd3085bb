#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mixpoly
{

/// Exit statuses of the command-line front end.
enum exit_status : int
{
  exit_ok = 0,
  exit_mismatch = 1,
  exit_usage = 2
};

/// Runs `mixpoly <subcommand> ...`; args excludes the program name.
int run_cli( const std::vector<std::string>& args, std::ostream& out, std::ostream& err );

} // namespace mixpoly
