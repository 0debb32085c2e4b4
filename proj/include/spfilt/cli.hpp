#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spfilt {

/// Runs one command (arguments without the program name) against the given
/// streams. Returns 0 on success, 1 when a domain validation fails and 2 on
/// a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spfilt
