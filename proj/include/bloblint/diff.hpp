#pragma once

#include <string>

namespace bloblint {

// Classic unified diff ("--- a/<path>", "+++ b/<path>", @@ hunks) with the
// given number of context lines. Returns "" when the inputs are identical.
std::string unified_diff(const std::string& before, const std::string& after,
                         const std::string& path, int context = 3);

}  // namespace bloblint
