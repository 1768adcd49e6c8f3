#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "realgw/cli.hpp"

namespace {

void add_common(CLI::App* cmd, realgw::cli::CommonOptions& opts, bool with_seed,
                bool with_format) {
  cmd->add_option("-d,--max-degree", opts.max_degree, "Maximum curve degree")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--target", opts.target, "Target space")
      ->check(CLI::IsMember({"p3"}))
      ->default_str("p3");
  if (with_seed) {
    auto* seed = cmd->add_option_function<std::string>(
        "--seed",
        [&opts](const std::string& s) { opts.seed_sign = (s == "-1") ? -1 : 1; },
        "OSpin seed sign for the degree-1 invariant");
    seed->check(CLI::IsMember({"+1", "-1"}));
  }
  if (with_format)
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--cache", [&opts](const std::vector<std::string>& v) {
    opts.cache_path = v.front();
    return true;
  }, "Archive cache path (loaded when compatible, rewritten otherwise)");
  cmd->add_option("-o,--output", opts.output, "Output file ('-' = stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Open and complex genus-0 Gromov-Witten invariants of P^3 via WDVV relations"};
  app.require_subcommand(1);

  realgw::cli::CommonOptions complex_opts;
  auto* complex_cmd =
      app.add_subcommand("complex-table", "Solve and emit the complex invariants");
  add_common(complex_cmd, complex_opts, /*with_seed=*/false, /*with_format=*/true);

  realgw::cli::CommonOptions real_opts;
  auto* real_cmd = app.add_subcommand("real-table", "Solve and emit the open invariants");
  add_common(real_cmd, real_opts, /*with_seed=*/true, /*with_format=*/true);

  realgw::cli::CommonOptions bounds_opts;
  auto* bounds_cmd = app.add_subcommand(
      "bounds-table", "Emit the full table: averaged lines, l_-/l_+ expansions, lower bounds");
  add_common(bounds_cmd, bounds_opts, /*with_seed=*/true, /*with_format=*/true);

  realgw::cli::VerifyOptions pde_opts;
  auto* pde_cmd = app.add_subcommand(
      "verify-pde", "Check both WDVV equations on the generating functions");
  add_common(pde_cmd, pde_opts, /*with_seed=*/true, /*with_format=*/false);
  pde_cmd->add_option("--q-cap", [&pde_opts](const std::vector<std::string>& v) {
    pde_opts.q_cap = std::stoi(v.front());
    return true;
  }, "q-degree cap (default: max degree)");
  pde_cmd->add_option("--t-cap", [&pde_opts](const std::vector<std::string>& v) {
    pde_opts.t_cap = std::stoi(v.front());
    return true;
  }, "t total-degree cap (default: twice the max degree)");

  realgw::cli::VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Reference-table diff plus residual sweeps of every relation instance");
  add_common(verify_cmd, verify_opts, /*with_seed=*/true, /*with_format=*/false);
  verify_cmd->add_flag("--skip-pde", verify_opts.skip_pde,
                       "Run the reference-table diff only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return realgw::cli::kExitUsage;
  }

  if (complex_cmd->parsed()) return realgw::cli::run_complex_table(complex_opts, std::cerr);
  if (real_cmd->parsed()) return realgw::cli::run_real_table(real_opts, std::cerr);
  if (bounds_cmd->parsed()) return realgw::cli::run_bounds_table(bounds_opts, std::cerr);
  if (pde_cmd->parsed()) return realgw::cli::run_verify_pde(pde_opts, std::cerr);
  if (verify_cmd->parsed()) return realgw::cli::run_verify(verify_opts, std::cerr);
  return realgw::cli::kExitUsage;
}
