#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kmap {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failure = 1;
inline constexpr int usage = 2;
inline constexpr int parse = 3;
inline constexpr int unstable = 4;
inline constexpr int path_explosion = 5;
}  // namespace exit_code

/// Entry point of the `kmap` tool. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kmap
