#pragma once

#include <iosfwd>

namespace omuco {

/// Regression checks on the reference instances. Prints one ok/FAIL line per
/// check and returns the number of failures.
int run_selftest(std::ostream& out);

}  // namespace omuco
