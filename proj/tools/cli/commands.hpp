#pragma once

#include <string>

namespace sbq::cli {

/// Full command dispatch. Exit codes: 0 success, 1 math error (singular or
/// zero input; the message names which seminorm vanished), 2 usage or parse
/// error. `verify` exits 0 iff all checks pass.
int run(int argc, const char* const* argv);

/// The multiplication table as printed by the `table` subcommand
/// (tab-separated, one row per left factor).
std::string table_text();

}  // namespace sbq::cli
