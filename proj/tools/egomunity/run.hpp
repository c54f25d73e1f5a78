#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ego::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Entry point behind the `egomunity` binary. `args` excludes the program
/// name. A graph path of "-" reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace ego::cli
