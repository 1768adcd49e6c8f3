#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>

#include "realgw/errors.hpp"
#include "realgw/linear_expr.hpp"
#include "realgw/multi_index.hpp"
#include "realgw/target.hpp"

namespace realgw {

/// Canonical complex invariant key: degree d with a insertions of the curve
/// class (h^2) and b of the point class (h^3). Divisor and fundamental-class
/// insertions are reduced away before a key is formed; nonzero keys satisfy
/// a + 2b = 4d.
struct ComplexKey {
  int degree = 0;
  int lines = 0;
  int points = 0;
  auto operator<=>(const ComplexKey&) const = default;
};

/// Genus-0 complex GW invariants of the target, populated degree by degree.
class ComplexStore {
 public:
  int solved_up_to() const { return solved_up_to_; }

  /// Exact count. Zero off the dimension gate; querying beyond the solved
  /// range throws NotSolvedError.
  Rational invariant(int degree, int lines, int points) const;

  const std::map<ComplexKey, Rational>& entries() const { return values_; }

  void set(const ComplexKey& key, Rational value);
  void seal(int degree);

 private:
  int solved_up_to_ = 0;
  std::map<ComplexKey, Rational> values_;
};

/// Evaluates <mu^insertions>_degree as a linear expression over ComplexKeys:
/// keys at unknown_degree stay symbolic, all others resolve through the
/// store. Applies the degree-0 triple-intersection convention, the
/// fundamental-class vanishing and the divisor relation.
LinearExpr<ComplexKey> complex_eval(const TargetModel& model, const ComplexStore& store,
                                    int degree, const MultiIndex& insertions,
                                    int unknown_degree = -1);

/// Fully reduced invariant of a raw insertion list (everything solved).
Rational complex_invariant(const TargetModel& model, const ComplexStore& store, int degree,
                           const MultiIndex& insertions);

struct ComplexWdvvInstance {
  int degree = 0;
  int a = 0, b = 0, c = 0, e = 0;
  MultiIndex lambda{0};
  /// The associativity relation as an affine expression that must vanish.
  LinearExpr<ComplexKey> relation;
};

/// Enumerates every four-point associativity instance whose dimension gate
/// admits degree-`degree` unknowns; lambda has nothing on the H^0 slot and at
/// most divisor_cap entries on each divisor slot.
void for_each_complex_instance(const TargetModel& model, const ComplexStore& store, int degree,
                               int divisor_cap, int unknown_degree,
                               const std::function<void(ComplexWdvvInstance&&)>& visit);

/// Solves the complex invariants of the target through max_degree: degree-1
/// seeds fixed by convention, each higher degree a linear system from the
/// associativity instances. Throws SolverError on any defect.
ComplexStore solve_complex(const TargetModel& model, int max_degree);

struct SweepReport {
  long instance_count = 0;
  bool ok = true;
  std::string first_failure;
};

/// Re-evaluates every associativity instance at degrees <= max_degree on the
/// solved store; each must be exactly zero.
SweepReport complex_residual_sweep(const TargetModel& model, const ComplexStore& store,
                                   int max_degree);

}  // namespace realgw
