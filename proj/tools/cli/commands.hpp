#pragma once

#include <ostream>

namespace commprob::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kInputError = 2 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace commprob::cli
