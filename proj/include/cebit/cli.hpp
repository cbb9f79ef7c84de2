#pragma once

#include <iosfwd>

namespace cebit {

// Exit codes: 0 success, 2 usage or config error, 3 runtime failure.
int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace cebit
