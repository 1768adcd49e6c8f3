#pragma once

#include <optional>
#include <ostream>
#include <string>

namespace realgw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitSolverFatal = 3;

struct CommonOptions {
  int max_degree = 3;
  int seed_sign = 1;
  std::string target = "p3";
  std::string format = "csv";  // csv | json
  std::optional<std::string> cache_path;
  std::string output = "-";  // "-" = stdout
};

int run_complex_table(const CommonOptions& opts, std::ostream& diag);
int run_real_table(const CommonOptions& opts, std::ostream& diag);
int run_bounds_table(const CommonOptions& opts, std::ostream& diag);

struct VerifyOptions : CommonOptions {
  bool skip_pde = false;
  /// Caps for the generating-function check; default from max_degree.
  std::optional<int> q_cap;
  std::optional<int> t_cap;
};

int run_verify_pde(const VerifyOptions& opts, std::ostream& diag);
int run_verify(const VerifyOptions& opts, std::ostream& diag);

}  // namespace realgw::cli
