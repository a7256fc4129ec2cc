#pragma once

#include <ostream>

namespace prodring {

/// Entry point of the prodring tool. Returns the process exit code:
/// 0 ok, 1 input error, 2 a scenario assertion failed.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace prodring
