#ifndef HAHN_CLI_APP_HPP
#define HAHN_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hahn::cli
{

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;  // a selftest suite failed
inline constexpr int exit_domain = 2;  // domain and mode errors
inline constexpr int exit_parse = 3;   // parse and usage errors
inline constexpr int exit_io = 4;

// Runs the command line (argv without the program name). JSON goes to `out`
// unless --output names a file; `in` backs --input -.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out);

} // namespace hahn::cli

#endif
