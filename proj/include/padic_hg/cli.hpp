#pragma once

#include <iosfwd>

namespace padic_hg {

/// Entry point of the padic-hg command line. Returns the exit code:
/// 0 on success, 1 on a usage error, 2 when methods disagree or a check fails.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace padic_hg
