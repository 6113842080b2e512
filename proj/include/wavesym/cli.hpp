#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wavesym {

// Exit codes: 0 all checks pass, 1 a verification failed, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace wavesym
