#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace btlat {

/// Entry point of the btlat tool. args excludes the program name. Returns
/// the process exit code: 0 success, 1 a verification sweep found a
/// counterexample, 2 usage or input error.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace btlat
