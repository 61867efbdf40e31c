#ifndef COREIDEAL_TOOLS_CLI_HPP
#define COREIDEAL_TOOLS_CLI_HPP

#include <exception>
#include <ostream>
#include <string>
#include <vector>

namespace coreideal::cli {

/// 0 ok, 1 usage or parse error, 2 theorem violation, 3 genericity failure.
int exit_code_for(std::exception_ptr error);

/// Full command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coreideal::cli

#endif  // COREIDEAL_TOOLS_CLI_HPP
