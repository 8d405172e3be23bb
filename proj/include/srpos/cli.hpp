// Subcommand front end. Exit status 0 on success, 1 on input errors and 2
// when the input fails the property a subcommand checks.

#ifndef SRPOS_CLI_HPP
#define SRPOS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace srpos::cli {

inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kViolation = 2;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace srpos::cli

#endif
