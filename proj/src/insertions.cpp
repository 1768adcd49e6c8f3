#include "realgw/insertions.hpp"

#include <sstream>

namespace realgw {

Integer expansion_coefficient(int p, int q, int m) {
  Integer acc(0);
  for (int i = 0; i <= m; ++i) {
    const int j = m - i;
    if (i > p || j > q) continue;
    const Integer term = binomial(static_cast<unsigned long>(p), static_cast<unsigned long>(i)) *
                         binomial(static_cast<unsigned long>(q), static_cast<unsigned long>(j));
    acc += (i % 2 == 0) ? term : -term;
  }
  return acc;
}

Rational sphere_trade(const TargetModel& model, const RealStore& store, int degree, int lines,
                      int points, int sphere_insertions) {
  if (sphere_insertions < 0)
    throw std::invalid_argument("sphere_trade: negative insertion count");
  // The sphere-class Poincare dual has half-degree 2, so the side carrying m
  // sphere insertions sits at k_lhs = ell/2 + (l+m) - (2a + 3b + 2m), one
  // real point fewer per insertion than the traded-to side.
  const RealKey base{degree, lines, points};
  const int l = lines + points;
  const int m = sphere_insertions;
  const int k_lhs =
      model.ell_omega(DegreeClass{degree}) / 2 + (l + m) - (2 * lines + 3 * points + 2 * m);
  if (k_lhs != base.real_points() - m)
    throw SolverError("sphere_trade: dimension bookkeeping mismatch");
  if (k_lhs < 0) return Rational(0);
  return Rational(2).pow(static_cast<unsigned>(m)) * store.invariant(degree, lines, points);
}

Rational mixed_line_invariant(const RealStore& store, int degree, int minus_lines, int plus_lines,
                              int points) {
  // l_-^p l_+^q = sum_m c_m(p,q) lt^{p+q-m} (s/2)^m; each s trades for a real
  // point and a factor 2, cancelling the (1/2)^m exactly.
  Rational acc(0);
  const int a = minus_lines + plus_lines;
  for (int m = 0; m <= a; ++m) {
    const Integer c = expansion_coefficient(minus_lines, plus_lines, m);
    if (c == 0) continue;
    acc += Rational(c) * store.invariant(degree, a - m, points);
  }
  return acc;
}

Rational lower_bound(const RealStore& store, int degree, int lines, int points) {
  Rational best;
  for (int i = 0; i <= lines; ++i) {
    const Rational v = abs(mixed_line_invariant(store, degree, lines - i, i, points));
    if (i == 0 || v < best) best = v;
  }
  return best;
}

std::vector<BoundsRow> emit_table(const TargetModel& model, const RealStore& rstore,
                                  const ComplexStore& cstore, int max_degree) {
  std::vector<BoundsRow> rows;
  for (int d = 1; d <= max_degree; ++d) {
    const int budget = model.ell_omega(DegreeClass{d}) / 2;  // 2d
    for (int a = 0; a <= budget; ++a) {
      for (int b = 0; a + 2 * b <= budget; ++b) {
        BoundsRow row;
        row.degree = d;
        row.lines = a;
        row.points = b;
        row.averaged = rstore.invariant(d, a, b);
        row.expansion.reserve(static_cast<std::size_t>(a) + 1);
        for (int i = 0; i <= a; ++i)
          row.expansion.push_back(mixed_line_invariant(rstore, d, a - i, i, b));
        row.min_abs = lower_bound(rstore, d, a, b);
        const int k = 2 * d - a - 2 * b;
        row.complex_count = cstore.invariant(d, 2 * a, 2 * b + k);
        row.extrapolated = d > 3;
        for (const Rational& v : row.expansion)
          if (!v.is_integer())
            throw SolverError("emit_table: non-integral expansion entry at row (" +
                              std::to_string(d) + "," + std::to_string(a) + "," +
                              std::to_string(b) + ")");
        if (!row.averaged.is_integer() || !row.complex_count.is_integer())
          throw SolverError("emit_table: non-integral invariant in row");
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

}  // namespace realgw
