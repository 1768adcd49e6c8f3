#include "realgw/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "realgw/archive.hpp"
#include "realgw/emit.hpp"
#include "realgw/errors.hpp"
#include "realgw/potentials.hpp"
#include "realgw/reference.hpp"

namespace realgw::cli {

namespace {

const TargetModel& resolve_target(const std::string& id) {
  if (id == "p3") return p3_target();
  throw std::invalid_argument("unknown target '" + id + "' (only p3 is available)");
}

struct Stores {
  ComplexStore cplx;
  RealStore real;
  InvariantArchive archive;  // loaded or freshly built; reused for json output
};

/// Loads the cache when it matches (target, seed, degrees); otherwise solves
/// and rewrites it. Without a cache path, just solves. Reloaded archives are
/// re-emitted verbatim so cache round-trips stay byte-identical.
Stores obtain_stores(const CommonOptions& opts, bool need_real, std::ostream& diag) {
  const TargetModel& model = resolve_target(opts.target);
  if (opts.cache_path && std::filesystem::exists(*opts.cache_path)) {
    InvariantArchive archive = InvariantArchive::load(*opts.cache_path);
    const bool usable = archive.target_id == model.id() &&
                        archive.complex_degree >= opts.max_degree &&
                        (!need_real || (archive.seed_sign == opts.seed_sign &&
                                        archive.real_degree >= opts.max_degree));
    if (usable)
      return Stores{archive.restore_complex(), archive.restore_real(), std::move(archive)};
    diag << "cache '" << *opts.cache_path << "' does not cover this request; recomputing\n";
  }
  Stores s{solve_complex(model, opts.max_degree), RealStore(opts.seed_sign), {}};
  if (need_real) s.real = solve_real(model, s.cplx, opts.max_degree, opts.seed_sign);
  s.archive = InvariantArchive::from_stores(model, s.cplx, s.real);
  if (opts.cache_path) s.archive.save(*opts.cache_path);
  return s;
}

int write_output(const std::string& payload, const std::string& path, std::ostream& diag) {
  if (path == "-") {
    std::cout << payload;
    return kExitOk;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    diag << "cannot open output file '" << path << "'\n";
    return kExitSolverFatal;
  }
  out << payload;
  return out ? kExitOk : kExitSolverFatal;
}

int guard(std::ostream& diag, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ArchiveError& e) {
    diag << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const std::invalid_argument& e) {
    diag << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    diag << "fatal: " << e.what() << "\n";
    return kExitSolverFatal;
  }
}

}  // namespace

int run_complex_table(const CommonOptions& opts, std::ostream& diag) {
  return guard(diag, [&] {
    Stores s = obtain_stores(opts, /*need_real=*/false, diag);
    if (opts.format == "json") return write_output(s.archive.to_json(), opts.output, diag);
    return write_output(complex_table_csv(s.cplx), opts.output, diag);
  });
}

int run_real_table(const CommonOptions& opts, std::ostream& diag) {
  return guard(diag, [&] {
    Stores s = obtain_stores(opts, /*need_real=*/true, diag);
    if (opts.format == "json") return write_output(s.archive.to_json(), opts.output, diag);
    return write_output(real_table_csv(s.real), opts.output, diag);
  });
}

int run_bounds_table(const CommonOptions& opts, std::ostream& diag) {
  return guard(diag, [&] {
    const TargetModel& model = resolve_target(opts.target);
    Stores s = obtain_stores(opts, /*need_real=*/true, diag);
    const auto rows = emit_table(model, s.real, s.cplx, opts.max_degree);
    if (opts.format == "json") return write_output(bounds_table_json(rows), opts.output, diag);
    return write_output(bounds_table_csv(rows), opts.output, diag);
  });
}

int run_verify_pde(const VerifyOptions& opts, std::ostream& diag) {
  return guard(diag, [&] {
    const TargetModel& model = resolve_target(opts.target);
    Stores s = obtain_stores(opts, /*need_real=*/true, diag);
    PotentialCaps caps;
    caps.q_cap = opts.q_cap.value_or(opts.max_degree);
    caps.t_cap = opts.t_cap.value_or(2 * opts.max_degree);
    const PotentialPair pair = build_potentials(model, s.cplx, s.real, caps);
    bool ok = true;
    for (const auto& report : verify_all_pdes(model, pair)) {
      if (report.ok) {
        std::cout << "PASS " << report.relation << "\n";
      } else {
        ok = false;
        std::cout << "FAIL " << report.relation << " first offender " << report.first_offender
                  << "\n";
      }
    }
    return ok ? kExitOk : kExitVerificationFailure;
  });
}

int run_verify(const VerifyOptions& opts, std::ostream& diag) {
  return guard(diag, [&] {
    const TargetModel& model = resolve_target(opts.target);
    Stores s = obtain_stores(opts, /*need_real=*/true, diag);
    bool ok = true;

    // Reference corpus diff (rows the reference corpus covers).
    const auto rows = emit_table(model, s.real, s.cplx, opts.max_degree);
    const ReferenceDiff diff = compare_to_reference(rows, opts.max_degree);
    for (const auto& note : diff.informational) std::cout << "INFO " << note << "\n";
    if (diff.ok) {
      std::cout << "PASS reference-table diff\n";
    } else {
      ok = false;
      for (const auto& m : diff.mismatches) std::cout << "FAIL " << m << "\n";
    }

    if (!opts.skip_pde) {
      const SweepReport cplx_sweep = complex_residual_sweep(model, s.cplx, opts.max_degree);
      std::cout << (cplx_sweep.ok ? "PASS" : "FAIL") << " complex residual sweep ("
                << cplx_sweep.instance_count << " instances)";
      if (!cplx_sweep.ok) std::cout << " first failure: " << cplx_sweep.first_failure;
      std::cout << "\n";
      ok = ok && cplx_sweep.ok;

      const SweepReport real_sweep = real_residual_sweep(model, s.cplx, s.real, opts.max_degree);
      std::cout << (real_sweep.ok ? "PASS" : "FAIL") << " real residual sweep ("
                << real_sweep.instance_count << " instances)";
      if (!real_sweep.ok) std::cout << " first failure: " << real_sweep.first_failure;
      std::cout << "\n";
      ok = ok && real_sweep.ok;

      PotentialCaps caps;
      caps.q_cap = opts.q_cap.value_or(opts.max_degree);
      caps.t_cap = opts.t_cap.value_or(2 * opts.max_degree);
      const PotentialPair pair = build_potentials(model, s.cplx, s.real, caps);
      bool pde_ok = true;
      for (const auto& report : verify_all_pdes(model, pair)) {
        if (!report.ok) {
          pde_ok = false;
          std::cout << "FAIL pde " << report.relation << " first offender "
                    << report.first_offender << "\n";
        }
      }
      std::cout << (pde_ok ? "PASS" : "FAIL") << " pde residual check\n";
      ok = ok && pde_ok;
    }
    return ok ? kExitOk : kExitVerificationFailure;
  });
}

}  // namespace realgw::cli
