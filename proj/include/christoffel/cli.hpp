#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace christoffel {

/// Command dispatch behind the `christoffel` binary. Returns 0 on success,
/// 2 on validation errors (one-line diagnostic on err) and 1 on internal
/// invariant violations.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace christoffel
