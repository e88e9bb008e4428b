#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shr {

/// Exit status: 0 all verdicts hold / input valid, 1 a verdict fails, 2 usage
/// or input error. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shr
