#pragma once

#include "reference_table.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace langdual::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsageError = 2 };

// Entry point shared by main() and the tests. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// table-check against an arbitrary row list; json_path empty means no JSON,
// "-" means JSON on out instead of text.
int table_check(const std::vector<ReferenceTableRow>& rows, const std::string& json_path, std::ostream& out);

}  // namespace langdual::cli
