#pragma once

#include <iosfwd>

namespace rootres {

// Exit codes: 0 positive verdict, 1 negative verdict, 2 usage or input
// error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rootres
