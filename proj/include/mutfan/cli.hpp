#pragma once
// Command line entry point. One subcommand per invocation:
//   mutate, class, eta, coherent, gvec, universal, specialize, pattern, fan
// Output is deterministic: exact rationals everywhere, stable ordering,
// floating point only inside SVG path data.
//
// Exit status: 0 success, 1 mathematical refutation (coherence refuted,
// no specialization exists, verification failed), 2 usage or input error.
//
// The default walk depth is 8; the environment variable MUTFAN_DEPTH
// overrides it, and an explicit --depth flag beats both.

#include <iosfwd>
#include <string>
#include <vector>

namespace mutfan {

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mutfan
