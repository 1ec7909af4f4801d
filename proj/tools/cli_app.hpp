#pragma once

#include <iosfwd>

namespace hyptree::cli {

// Full command-line front end; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyptree::cli
