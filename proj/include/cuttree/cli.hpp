#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cuttree {

class Network;

// Exit codes of the command-line front end.
enum ExitCode { kOk = 0, kInputError = 1, kVerifyFailed = 2 };

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

// Oracle cross-checks behind `verify`; appends a line per failed check.
bool verify_network(const Network& net, std::vector<std::string>& failures);

}  // namespace cuttree
