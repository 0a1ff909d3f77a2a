#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "vguard/pipeline.hpp"

namespace vguard {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 1,
  kExitVerificationFailed = 2,
  kExitInternalFailure = 3,
};

struct CliHooks {
  SpecialTriangleSearch search = find_special_triangle;
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const CliHooks& hooks = {});

}  // namespace vguard
