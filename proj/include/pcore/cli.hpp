#pragma once

#include <ostream>

namespace pcore {

// Entry point of the `pcore` tool. Data goes to files or `out`, timings and
// diagnostics to `err`. Returns the process exit status: 0 on success, 1 on
// runtime errors, CLI11's code on usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pcore
