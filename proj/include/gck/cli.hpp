#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gck {

// The whole command-line front end, in-process for testability. Returns the
// exit code: 0 success, 1 domain error (structured diagnostic on out),
// 2 config/usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gck
