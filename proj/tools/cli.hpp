#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace compidx::cli {

enum ExitCode : int {
  kOk = 0,
  kClaimFailed = 1,
  kUsage = 2,
  kInternal = 3,
};

// Runs one subcommand. Tests call this directly with string streams; main()
// passes std::cout / std::cerr.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace compidx::cli
