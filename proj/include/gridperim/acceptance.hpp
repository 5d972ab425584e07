#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gridperim::acceptance {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Options {
    /// Caps the exhaustive oracle at volume 9 and the parametric-vs-
    /// partition cross-check at 40.
    bool quick = false;
};

/// Runs the full verification suite, streaming one pass/fail line per
/// criterion to `log`.
std::vector<CheckResult> run(const Options& opt, std::ostream& log);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace gridperim::acceptance
