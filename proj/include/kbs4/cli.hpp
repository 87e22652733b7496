// Command-line entry point. Deterministic text and JSON output; exit code
// 0 on success or all-pass, 1 on a failed verification, 2 on usage errors.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kbs4::cli {

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace kbs4::cli
