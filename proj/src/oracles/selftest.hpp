#pragma once

#include <iosfwd>

namespace korobov {

// Quick library-vs-oracle checks; one line per check. True when all pass.
bool run_selftest(std::ostream& log);

}  // namespace korobov
