#ifndef SUSP_CLI_HPP
#define SUSP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace susp::cli {

// Runs the command line given as argv-style arguments (program name
// excluded). Exit codes: 0 success, 1 property violation or negative
// verdict, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace susp::cli

#endif
