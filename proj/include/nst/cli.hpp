#pragma once

#include <iosfwd>

namespace nst {

/// Exit codes shared by all subcommands.
enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,
  kExitInput = 2,
  kExitInsufficient = 3,
  kExitNothingToWitness = 4,
};

/// Entry point of the `nst` tool: build, verify, witness and separate.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nst
