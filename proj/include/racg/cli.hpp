#ifndef RACG_CLI_HPP
#define RACG_CLI_HPP

#include <ostream>

namespace racg::cli {

/// Exit status: 0 when the question was decided, 2 when a search stopped at
/// its radius without a witness, 1 on bad input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace racg::cli

#endif  // RACG_CLI_HPP
