#pragma once

#include <ostream>

#include "verify.hpp"

namespace hdet::cli {

/// Exit codes: 0 success, 1 verification failure, 2 usage or argument error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
            const InvariantFn& invariants = VerifyOptions{}.invariants);

}  // namespace hdet::cli
