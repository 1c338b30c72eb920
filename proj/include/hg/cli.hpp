#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hg {

// Runs one command-line invocation. `args` excludes the program name.
// Exit status: 0 success/verified, 1 verification failure (witness printed),
// 2 usage or input error, 3 timeout/partial result.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace hg
