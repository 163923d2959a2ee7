#pragma once

#include <iosfwd>

namespace ehrtri {

/// Exit codes: 0 success, 1 verification mismatch, 2 malformed input.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace ehrtri
