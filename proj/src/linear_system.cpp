#include "realgw/linear_system.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace realgw {

void RationalLinearSystem::add_equation(LinearEquation eq) {
  for (const auto& [idx, coeff] : eq.coefficients) {
    (void)coeff;
    if (idx < 0 || idx >= unknown_count_)
      throw std::out_of_range("RationalLinearSystem: coefficient index outside unknown set");
  }
  equations_.push_back(std::move(eq));
}

namespace {

// Reduced row in the running echelon basis:
//   x_pivot + sum_{c} coeffs[c] * x_c = rhs,   coeffs only on non-pivot columns.
struct Row {
  std::map<int, Rational> coeffs;
  Rational rhs;
};

void add_scaled(std::map<int, Rational>& dst, int col, const Rational& delta) {
  if (delta.is_zero()) return;
  auto [it, fresh] = dst.emplace(col, delta);
  if (!fresh) {
    it->second += delta;
    if (it->second.is_zero()) dst.erase(it);
  }
}

}  // namespace

SolveOutcome solve_linear(const RationalLinearSystem& system) {
  const int n = system.unknown_count();
  std::map<int, Row> pivots;

  SolveOutcome out;
  out.values.assign(static_cast<std::size_t>(n), std::nullopt);

  int eq_index = -1;
  for (const auto& eq : system.equations()) {
    ++eq_index;
    Row row;
    row.rhs = eq.rhs;
    for (const auto& [idx, coeff] : eq.coefficients) add_scaled(row.coeffs, idx, coeff);

    // Substitute every pivot column away. Pivot rows carry only non-pivot
    // columns, so collecting the hits once is enough.
    std::vector<std::pair<int, Rational>> hits;
    for (const auto& [c, v] : row.coeffs)
      if (pivots.count(c)) hits.emplace_back(c, v);
    for (const auto& [c, f] : hits) {
      row.coeffs.erase(c);
      const Row& p = pivots.at(c);
      for (const auto& [j, v] : p.coeffs) add_scaled(row.coeffs, j, -f * v);
      row.rhs -= f * p.rhs;
    }

    if (row.coeffs.empty()) {
      if (!row.rhs.is_zero()) {
        out.status = SolveStatus::kInconsistent;
        out.witness_equation = eq_index;
        out.witness_residual = row.rhs;
        return out;
      }
      continue;  // redundant equation
    }

    // Pivot selection: largest numerator magnitude bounds intermediate growth.
    auto best = row.coeffs.begin();
    for (auto it = std::next(row.coeffs.begin()); it != row.coeffs.end(); ++it)
      if (abs(it->second.numerator()) > abs(best->second.numerator())) best = it;
    const int pivot_col = best->first;
    const Rational inv = Rational(1) / best->second;

    Row norm;
    norm.rhs = row.rhs * inv;
    for (const auto& [c, v] : row.coeffs)
      if (c != pivot_col) norm.coeffs.emplace(c, v * inv);

    for (auto& [pc, prow] : pivots) {
      auto hit = prow.coeffs.find(pivot_col);
      if (hit == prow.coeffs.end()) continue;
      const Rational f = hit->second;
      prow.coeffs.erase(hit);
      for (const auto& [c, v] : norm.coeffs) add_scaled(prow.coeffs, c, -f * v);
      prow.rhs -= f * norm.rhs;
    }
    pivots.emplace(pivot_col, std::move(norm));
  }

  std::vector<bool> has_pivot(static_cast<std::size_t>(n), false);
  for (const auto& [pc, prow] : pivots) has_pivot[static_cast<std::size_t>(pc)] = true;
  for (int c = 0; c < n; ++c)
    if (!has_pivot[static_cast<std::size_t>(c)]) out.free_unknowns.push_back(c);

  for (const auto& [pc, prow] : pivots)
    if (prow.coeffs.empty()) out.values[static_cast<std::size_t>(pc)] = prow.rhs;

  out.status = out.free_unknowns.empty() ? SolveStatus::kSolved : SolveStatus::kUnderdetermined;
  if (out.status == SolveStatus::kSolved)
    for (int c = 0; c < n; ++c)
      if (!out.values[static_cast<std::size_t>(c)])
        throw std::logic_error("solve_linear: pivot without value in solved system");
  return out;
}

bool zero_residuals(const RationalLinearSystem& system, const std::vector<Rational>& values) {
  if (values.size() != static_cast<std::size_t>(system.unknown_count()))
    throw std::invalid_argument("zero_residuals: assignment size mismatch");
  for (const auto& eq : system.equations()) {
    Rational acc = -eq.rhs;
    for (const auto& [idx, coeff] : eq.coefficients)
      acc += coeff * values[static_cast<std::size_t>(idx)];
    if (!acc.is_zero()) return false;
  }
  return true;
}

}  // namespace realgw
