#pragma once

#include <ostream>

namespace strichartz::cli {

// Entry point of the `strichartz` runner; returns the process exit status.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace strichartz::cli
