#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gridperim::cli {

/// Runs one CLI invocation. Returns 0 on success, 1 on usage errors or
/// failed verification, 2 when an oracle budget is exceeded.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gridperim::cli
