#pragma once

#include <iostream>
#include <vector>
#include <string>

namespace verlag {

// Entry point behind the verlag binary.  JSON/table data goes to `out`,
// diagnostics and timing to `err`.  Exit codes: 0 success, 1 validation or
// scope error, 2 verification disagreement.
int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace verlag
