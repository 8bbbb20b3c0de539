#pragma once

#include <iosfwd>

namespace korobov::cli {

// Entry point of the `korobov` tool. Reports go to --out when given,
// otherwise to `out`; diagnostics go to `err`.
// Exit codes: 0 ok, 1 internal error, 2 usage/config error, 3 infeasible.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace korobov::cli
