#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "realgw/complex_gw.hpp"
#include "realgw/errors.hpp"
#include "realgw/linear_expr.hpp"
#include "realgw/multi_index.hpp"
#include "realgw/target.hpp"

namespace realgw {

/// Canonical open-invariant key: degree d with `lines` averaged-line (H^4)
/// and `points` point-pair (H^6) insertions. The real-point count is pinned
/// by the dimension condition: k = 2d - lines - 2*points, and only keys with
/// k >= 0 are ever stored.
struct RealKey {
  int degree = 0;
  int lines = 0;
  int points = 0;
  int real_points() const { return 2 * degree - lines - 2 * points; }
  auto operator<=>(const RealKey&) const = default;
};

std::string to_string(const RealKey& key);

/// Open GW / Welschinger-type invariants of (target, real locus), solved
/// degree by degree from the single degree-1 seed.
class RealStore {
 public:
  explicit RealStore(int seed_sign = 1) : seed_sign_(seed_sign) {}

  int seed_sign() const { return seed_sign_; }
  int solved_up_to() const { return solved_up_to_; }

  /// Exact invariant <lt^lines pt^points>_degree. Zero when k < 0 or when
  /// parity (degree + lines even) forces vanishing; throws NotSolvedError
  /// beyond the solved range.
  Rational invariant(int degree, int lines, int points) const;

  const std::map<RealKey, Rational>& entries() const { return values_; }

  void set(const RealKey& key, Rational value);
  void seal(int degree);

 private:
  int seed_sign_;
  int solved_up_to_ = 0;
  std::map<RealKey, Rational> values_;
};

/// Outcome of reducing a raw insertion list: exactly one of
///   - zero,
///   - a pure scalar (the (B,k,l) = (0,1,1) fundamental-class case), or
///   - factor * <key>.
struct NormalizeResult {
  enum class Kind { kZero, kScalar, kKey };
  Kind kind = Kind::kZero;
  Rational factor;
  RealKey key;
};

/// Multilinear reduction of <mu^insertions>_{degree,k}: strips divisor
/// insertions (factor <h, B> each), returns zero for H^0 insertions away
/// from the (0,1,1) case, for a mismatched k, and for the parity-vanishing
/// keys (degree + lines even). Total function.
NormalizeResult normalize(const TargetModel& model, int degree, const MultiIndex& insertions,
                          int k);

/// View of the real store during a tier solve: keys at `current_degree` and
/// keys in `carried` stay symbolic, everything else resolves. With
/// current_degree = -1 and no carries every key resolves (residual sweeps).
struct RealSolveView {
  const RealStore* store = nullptr;
  int current_degree = -1;
  const std::set<RealKey>* carried = nullptr;

  bool symbolic(const RealKey& key) const {
    if (key.degree == current_degree) return true;
    return carried != nullptr && carried->count(key) > 0;
  }
};

/// <mu^insertions>_{degree,k} as an affine expression over the view's
/// symbolic keys.
LinearExpr<RealKey> real_eval(const TargetModel& model, const RealSolveView& view, int degree,
                              const MultiIndex& insertions, int k);

/// One instantiated relation: affine in the symbolic keys, must vanish.
struct LinearInstance {
  std::string relation_tag;  // "M12(a,b)" or "M03(a,b,c)"
  int degree = 0;
  int k = 0;
  MultiIndex lambda{0};
  LinearExpr<RealKey> relation;
};

/// The first relation instantiated at basis indices (a, b), degree and
/// lambda; k is pinned by the dimension gate. Returns nullopt (gate-skip)
/// when the gate yields k < 1.
std::optional<LinearInstance> m12_instance(const TargetModel& model, const ComplexStore& cstore,
                                           const RealSolveView& view, int a, int b, int degree,
                                           const MultiIndex& lambda);

/// The second relation (difference of the two Psi contractions) at (a, b, c);
/// gate-skip when the gate yields k < 0.
std::optional<LinearInstance> m03_instance(const TargetModel& model, const ComplexStore& cstore,
                                           const RealSolveView& view, int a, int b, int c,
                                           int degree, const MultiIndex& lambda);

/// Enumerates all gated instances of both relations whose unknowns live at
/// `degree` (lambda: nothing on the H^0 slot, divisor entries up to
/// divisor_cap, the other slots bounded by the gates).
void for_each_real_instance(const TargetModel& model, const ComplexStore& cstore,
                            const RealSolveView& view, int degree, int divisor_cap,
                            const std::function<void(LinearInstance&&)>& visit);

/// Solves the open invariants through max_degree from the degree-1 seed
/// <>_{1,k=2} = seed_sign. Parity-vanishing keys are entered as explicit
/// zero constraints and their consistency with the relation corpus is part
/// of the solve. Keys a tier leaves free are carried into the next tier
/// (the relations pin the degree-1 k=0 family and each odd-degree bare key
/// only one tier later); one tier beyond max_degree is processed when
/// needed. Anything still free afterwards is a fatal diagnostic.
RealStore solve_real(const TargetModel& model, const ComplexStore& cstore, int max_degree,
                     int seed_sign);

/// Re-evaluates every gated instance at degrees <= max_degree against the
/// solved stores; all residuals must vanish exactly.
SweepReport real_residual_sweep(const TargetModel& model, const ComplexStore& cstore,
                                const RealStore& rstore, int max_degree);

}  // namespace realgw
