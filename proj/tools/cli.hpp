#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace specmoore::cli {

// Runs one command line (without argv[0]). Writes the rendered envelope to
// `out` and diagnostics to `err`.
//
// Exit codes: 0 success, 2 usage/parse error, 3 theta out of range,
// 4 bound-domain error, 5 graph error. `table1` additionally exits 1 when a
// recomputed cell fails to match the shipped reference values.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace specmoore::cli
