#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gop::cli {

/// Runs one command line (args excludes the program name). Returns the exit
/// status: 0 ok, 1 usage error, 2 domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gop::cli
