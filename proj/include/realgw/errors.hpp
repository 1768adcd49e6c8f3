#pragma once

#include <stdexcept>

namespace realgw {

/// Fatal solver diagnostics: inconsistent or underdetermined systems where
/// the relations guarantee neither can happen.
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Query for an invariant beyond the solved degree range. Never a silent 0.
struct NotSolvedError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace realgw
