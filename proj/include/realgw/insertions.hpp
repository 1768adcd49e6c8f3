#pragma once

#include <vector>

#include "realgw/complex_gw.hpp"
#include "realgw/real_wdvv.hpp"

namespace realgw {

/// c_m(p,q) = sum_{i+j=m} (-1)^i C(p,i) C(q,j): the coefficient of
/// lt^{p+q-m} (s/2)^m in l_-^p l_+^q with l_\pm = lt -/+ s/2.
Integer expansion_coefficient(int p, int q, int m);

/// Invariant with m sphere-class insertions appended to <lt^a pt^b>_d:
/// each trade removes one real point from the left-hand side's dimension
/// count and doubles the value, so the result is 2^m times the base
/// invariant. The k bookkeeping is rederived and checked here.
Rational sphere_trade(const TargetModel& model, const RealStore& store, int degree, int lines,
                      int points, int sphere_insertions = 1);

/// <l_-^p l_+^q pt^b>_degree via the sphere-insertion trade:
/// sum_m c_m(p,q) <lt^{p+q-m} pt^b>_degree.
Rational mixed_line_invariant(const RealStore& store, int degree, int minus_lines, int plus_lines,
                              int points);

/// min_i |<l_-^{a-i} l_+^i pt^b>|: the lower bound for real rational curve
/// counts through a lines and b point pairs.
Rational lower_bound(const RealStore& store, int degree, int lines, int points);

struct BoundsRow {
  int degree = 0;
  int lines = 0;   // a
  int points = 0;  // b
  Rational averaged;                // <lt^a pt^b>_d
  std::vector<Rational> expansion;  // <l_-^{a-i} l_+^i pt^b>, i = 0..a
  Rational min_abs;
  Rational complex_count;  // complex invariant through 2a lines, 2b+k points
  bool extrapolated = false;  // beyond the d <= 3 reference corpus
};

/// One row per (d, a, b) with k = 2d-a-2b >= 0, d <= max_degree. All entries
/// are integers; integrality is asserted at emission.
std::vector<BoundsRow> emit_table(const TargetModel& model, const RealStore& rstore,
                                  const ComplexStore& cstore, int max_degree);

}  // namespace realgw
