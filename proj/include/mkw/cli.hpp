#pragma once

#include <iosfwd>

namespace mkw {

// Exit codes: 0 success, 1 a verification failed, 2 usage or parse error,
// 3 degree cap exceeded.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mkw
