#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "realgw/rational.hpp"

namespace realgw {

/// One equation sum_i coeff_i * x_i = rhs over unknowns addressed by index.
struct LinearEquation {
  std::vector<std::pair<int, Rational>> coefficients;
  Rational rhs;
};

/// A (typically heavily redundant) exact linear system over Q.
class RationalLinearSystem {
 public:
  explicit RationalLinearSystem(int unknown_count) : unknown_count_(unknown_count) {}

  void add_equation(LinearEquation eq);

  int unknown_count() const { return unknown_count_; }
  const std::vector<LinearEquation>& equations() const { return equations_; }

 private:
  int unknown_count_;
  std::vector<LinearEquation> equations_;
};

enum class SolveStatus { kSolved, kUnderdetermined, kInconsistent };

struct SolveOutcome {
  SolveStatus status = SolveStatus::kSolved;
  /// Per unknown: value when pinned, nullopt when free or entangled with a
  /// free unknown.
  std::vector<std::optional<Rational>> values;
  std::vector<int> free_unknowns;
  /// Inconsistency witness: index of the offending equation and the residual
  /// its reduction leaves behind.
  int witness_equation = -1;
  Rational witness_residual;
};

/// Exact Gaussian elimination, incremental over the equation list, pivot
/// chosen by largest numerator magnitude within each reduced row.
SolveOutcome solve_linear(const RationalLinearSystem& system);

/// Substitutes a full assignment into every equation; true iff all residuals
/// are exactly zero.
bool zero_residuals(const RationalLinearSystem& system, const std::vector<Rational>& values);

}  // namespace realgw
