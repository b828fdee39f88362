#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cards {

// Exit codes: 0 success, 1 validation error, 2 budget or cap exceeded,
// 3 verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace cards
