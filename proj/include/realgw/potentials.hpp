#pragma once

#include <string>
#include <vector>

#include "realgw/complex_gw.hpp"
#include "realgw/real_wdvv.hpp"
#include "realgw/series.hpp"

namespace realgw {

/// Caps for the generating-function pair: q up to q_cap, t total degree up to
/// t_cap; the u cap is derived (2*q_cap + 2) since k <= 2d on every stored
/// invariant.
struct PotentialCaps {
  int q_cap = 0;
  int t_cap = 0;
  int u_cap() const { return 2 * q_cap + 2; }
};

/// The two generating functions as truncated series: phi collects the
/// complex invariants graded by the doubled class, omega the open ones with
/// the 2^{1-l} q^B u^k / (k! l!) weights.
struct PotentialPair {
  TruncatedSeries phi;
  TruncatedSeries omega;
  PotentialCaps caps;
};

/// Weight of <mu^lambda>_{B,k} in omega: 2^{1-|lambda|} / (k! lambda!).
/// Centralized so the series construction and the coefficient<->instance
/// comparison tests cannot drift apart.
Rational omega_weight(int k, const MultiIndex& lambda);

/// Weight of <mu^lambda>_{B'} in phi: 1 / lambda!.
Rational phi_weight(const MultiIndex& lambda);

/// Builds the pair from solved stores; throws if a cap exceeds the solved
/// degree ranges.
PotentialPair build_potentials(const TargetModel& model, const ComplexStore& cstore,
                               const RealStore& rstore, const PotentialCaps& caps);

/// Left minus right side of the first WDVV equation at indices (a, b); the
/// result's caps account for the derivatives taken, and the series must be
/// identically zero below them.
TruncatedSeries pde_residual_m12(const TargetModel& model, const PotentialPair& pair, int a,
                                 int b);

/// Same for the second WDVV equation at (a, b, c).
TruncatedSeries pde_residual_m03(const TargetModel& model, const PotentialPair& pair, int a,
                                 int b, int c);

struct PdeReport {
  std::string relation;
  bool ok = true;
  std::string first_offender;  // empty when ok
};

/// Runs both relations over every basis-index tuple; machine-readable
/// pass/fail per tuple with the lowest offending exponent on failure.
std::vector<PdeReport> verify_all_pdes(const TargetModel& model, const PotentialPair& pair);

}  // namespace realgw
