#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace latgate {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;

// Entry point of the latgate command line; args excludes the program name.
int run_cli(std::vector<std::string> const& args, std::ostream& out,
            std::ostream& err);

}  // namespace latgate
