#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace choix::cli {

// Exit codes
inline constexpr int kOk = 0;
inline constexpr int kInconsistent = 1;  // `check` on an inconsistent assessment
inline constexpr int kInputError = 2;    // bad flags, unreadable or malformed input
inline constexpr int kSolverError = 3;   // LP backend gave up

/// Runs one invocation. `args` excludes the program name.
///
///   check      --assessment a.json [--method naive|conj|full]
///   choose     --assessment a.json --options o.json [--method ...]
///   simplify   --assessment a.json
///   experiment size|epsilon|timing --config c.json [--seed N] [--out r.csv]
///
/// JSON goes to `out` (one line, keys sorted); diagnostics go to `err`.
/// CHOIX_LP_TOL in the environment overrides the LP tolerance.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace choix::cli
