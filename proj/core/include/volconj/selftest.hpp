#ifndef VOLCONJ_SELFTEST_HPP
#define VOLCONJ_SELFTEST_HPP

#include <ostream>

namespace volconj {

// Runs the library's invariant/property suites (special functions, holonomy,
// potentials, Habiro sums, asymptotics, surgery, optimistic limit), printing
// one line per check.  Returns true iff every check passes.
bool run_selftest(std::ostream& out, unsigned threads = 1);

}  // namespace volconj

#endif  // VOLCONJ_SELFTEST_HPP
