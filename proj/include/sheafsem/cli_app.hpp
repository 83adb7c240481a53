#ifndef SHEAFSEM_CLI_APP_HPP
#define SHEAFSEM_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sheafsem {

// Runs the command-line driver: exit code 0 on success, 1 on semantic
// failure (no gluing, empty support, law violations), 2 on usage, parse or
// other input errors. The input stream backs a problem-file path of "-".
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace sheafsem

#endif
