#ifndef ISOKIT_CLI_HPP
#define ISOKIT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace isokit::cli {

inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitGuard = 3;

// args excludes the program name. Results go to `out`, diagnostics and
// --stats reports to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isokit::cli

#endif  // ISOKIT_CLI_HPP
