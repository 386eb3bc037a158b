#pragma once

#include <string>
#include <vector>

namespace syz {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // failure explanation or a short summary
};

// Full reproduction suite: splitting tables, Chern sums, the two worked
// curve constructions, the direct unexpectedness computation, fixture curve
// verification, unexpected-type columns, and the property suites. `filter`
// keeps the checks whose name contains it ("" runs everything).
std::vector<CheckResult> run_reproduction(const std::string& filter = "");

// Absolute path of a fixture file shipped with the sources.
std::string fixture_path(const std::string& name);

}  // namespace syz
