#include "realgw/complex_gw.hpp"

#include <sstream>

#include "realgw/linear_system.hpp"

namespace realgw {

namespace {

// P^3-family basis shape: one generator per half-degree 0..3.
struct BasisSlots {
  int unit;     // H^0
  int divisor;  // H^2
  int curve;    // H^4
  int point;    // H^6
};

BasisSlots basis_slots(const TargetModel& model) {
  BasisSlots s{-1, -1, -1, -1};
  for (int j = 0; j < model.basis_size(); ++j) {
    int* slot = nullptr;
    switch (model.half_degree(j)) {
      case 0: slot = &s.unit; break;
      case 1: slot = &s.divisor; break;
      case 2: slot = &s.curve; break;
      case 3: slot = &s.point; break;
      default: throw SolverError("complex_gw: basis half-degree outside 0..3");
    }
    if (*slot != -1)
      throw SolverError("complex_gw: repeated half-degree in basis (only rank-one slots supported)");
    *slot = j;
  }
  if (s.unit < 0 || s.divisor < 0 || s.curve < 0 || s.point < 0)
    throw SolverError("complex_gw: basis does not cover half-degrees 0..3");
  return s;
}

}  // namespace

Rational ComplexStore::invariant(int degree, int lines, int points) const {
  if (degree < 0) return Rational(0);
  if (lines < 0 || points < 0) return Rational(0);
  if (lines + 2 * points != 4 * degree) return Rational(0);
  if (degree > solved_up_to_) {
    std::ostringstream os;
    os << "ComplexStore: degree " << degree << " not solved (have " << solved_up_to_ << ")";
    throw NotSolvedError(os.str());
  }
  auto it = values_.find(ComplexKey{degree, lines, points});
  if (it == values_.end())
    throw NotSolvedError("ComplexStore: gated key missing from sealed degree");
  return it->second;
}

void ComplexStore::set(const ComplexKey& key, Rational value) {
  values_[key] = std::move(value);
}

void ComplexStore::seal(int degree) { solved_up_to_ = degree; }

LinearExpr<ComplexKey> complex_eval(const TargetModel& model, const ComplexStore& store,
                                    int degree, const MultiIndex& insertions,
                                    int unknown_degree) {
  using Expr = LinearExpr<ComplexKey>;
  if (degree < 0) return Expr();
  const BasisSlots slots = basis_slots(model);
  if (degree == 0) {
    // Degree-0 invariants are the classical triple intersections; any other
    // insertion count vanishes.
    if (insertions.total() != 3) return Expr();
    std::vector<int> idx;
    for (int j = 0; j < model.basis_size(); ++j)
      for (int r = 0; r < insertions[static_cast<std::size_t>(j)]; ++r) idx.push_back(j);
    return Expr::constant(model.triple_intersection(idx[0], idx[1], idx[2]));
  }
  if (insertions[static_cast<std::size_t>(slots.unit)] > 0) return Expr();  // fundamental class
  Rational mult(1);
  const int divisors = insertions[static_cast<std::size_t>(slots.divisor)];
  if (divisors > 0) {
    // Divisor relation: each H^2 insertion contributes <h, B> = degree.
    mult = Rational(degree).pow(static_cast<unsigned>(divisors));
  }
  const int a = insertions[static_cast<std::size_t>(slots.curve)];
  const int b = insertions[static_cast<std::size_t>(slots.point)];
  if (a + 2 * b != model.ell_omega(DegreeClass{degree})) return Expr();
  const ComplexKey key{degree, a, b};
  if (degree == unknown_degree) return Expr::unknown(key, mult);
  return Expr::constant(mult * store.invariant(degree, a, b));
}

Rational complex_invariant(const TargetModel& model, const ComplexStore& store, int degree,
                           const MultiIndex& insertions) {
  return complex_eval(model, store, degree, insertions).constant_part();
}

void for_each_complex_instance(const TargetModel& model, const ComplexStore& store, int degree,
                               int divisor_cap, int unknown_degree,
                               const std::function<void(ComplexWdvvInstance&&)>& visit) {
  const int n = model.basis_size();
  const BasisSlots slots = basis_slots(model);
  const auto& hdeg = model.half_degrees();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = b + 1; c < n; ++c)  // relation is antisymmetric in (b, c)
        for (int e = 0; e < n; ++e) {
          const int need = model.ell_omega(DegreeClass{degree}) + 3 -
                           (hdeg[static_cast<std::size_t>(a)] + hdeg[static_cast<std::size_t>(b)] +
                            hdeg[static_cast<std::size_t>(c)] + hdeg[static_cast<std::size_t>(e)]);
          if (need < 0) continue;
          for (int lam3 = 0; 2 * lam3 <= need; ++lam3) {
            const int lam2 = need - 2 * lam3;
            for (int lam1 = 0; lam1 <= divisor_cap; ++lam1) {
              MultiIndex lambda(static_cast<std::size_t>(n));
              lambda[static_cast<std::size_t>(slots.divisor)] = lam1;
              lambda[static_cast<std::size_t>(slots.curve)] = lam2;
              lambda[static_cast<std::size_t>(slots.point)] = lam3;

              LinearExpr<ComplexKey> rel;
              for (int d1 = 0; d1 <= degree; ++d1) {
                const int d2 = degree - d1;
                lambda.for_each_sub([&](const MultiIndex& alpha) {
                  const MultiIndex beta = lambda.minus(alpha);
                  const Rational w = multi_binomial(lambda, alpha);
                  for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                      const Rational g = model.pairing_inverse(i, j);
                      if (g.is_zero()) continue;
                      auto left = complex_eval(
                          model, store, d1,
                          alpha.plus_one(static_cast<std::size_t>(a))
                              .plus_one(static_cast<std::size_t>(b))
                              .plus_one(static_cast<std::size_t>(i)),
                          unknown_degree);
                      if (!left.is_zero()) {
                        auto right = complex_eval(
                            model, store, d2,
                            beta.plus_one(static_cast<std::size_t>(j))
                                .plus_one(static_cast<std::size_t>(c))
                                .plus_one(static_cast<std::size_t>(e)),
                            unknown_degree);
                        rel += left.times(right).scaled(w * g);
                      }
                      auto left_swapped = complex_eval(
                          model, store, d1,
                          alpha.plus_one(static_cast<std::size_t>(a))
                              .plus_one(static_cast<std::size_t>(c))
                              .plus_one(static_cast<std::size_t>(i)),
                          unknown_degree);
                      if (!left_swapped.is_zero()) {
                        auto right_swapped = complex_eval(
                            model, store, d2,
                            beta.plus_one(static_cast<std::size_t>(j))
                                .plus_one(static_cast<std::size_t>(b))
                                .plus_one(static_cast<std::size_t>(e)),
                            unknown_degree);
                        rel -= left_swapped.times(right_swapped).scaled(w * g);
                      }
                    }
                });
              }
              ComplexWdvvInstance inst;
              inst.degree = degree;
              inst.a = a;
              inst.b = b;
              inst.c = c;
              inst.e = e;
              inst.lambda = lambda;
              inst.relation = std::move(rel);
              visit(std::move(inst));
            }
          }
        }
}

namespace {

constexpr int kDivisorCap = 2;

std::vector<ComplexKey> degree_keys(const TargetModel& model, int degree) {
  std::vector<ComplexKey> keys;
  const int budget = model.ell_omega(DegreeClass{degree});
  for (int b = 0; 2 * b <= budget; ++b) keys.push_back(ComplexKey{degree, budget - 2 * b, b});
  return keys;
}

}  // namespace

ComplexStore solve_complex(const TargetModel& model, int max_degree) {
  if (max_degree < 1) throw SolverError("solve_complex: max_degree must be >= 1");
  ComplexStore store;
  // Degree-1 convention seeds: the classical line counts through four lines,
  // two lines and a point, and two points.
  store.set(ComplexKey{1, 4, 0}, Rational(2));
  store.set(ComplexKey{1, 2, 1}, Rational(1));
  store.set(ComplexKey{1, 0, 2}, Rational(1));
  store.seal(1);

  for (int d = 2; d <= max_degree; ++d) {
    const std::vector<ComplexKey> keys = degree_keys(model, d);
    std::map<ComplexKey, int> index;
    for (std::size_t i = 0; i < keys.size(); ++i) index[keys[i]] = static_cast<int>(i);

    RationalLinearSystem system(static_cast<int>(keys.size()));
    for_each_complex_instance(model, store, d, kDivisorCap, d,
                              [&](ComplexWdvvInstance&& inst) {
                                if (inst.relation.is_zero()) return;
                                LinearEquation eq;
                                eq.rhs = -inst.relation.constant_part();
                                for (const auto& [key, coeff] : inst.relation.terms())
                                  eq.coefficients.emplace_back(index.at(key), coeff);
                                system.add_equation(std::move(eq));
                              });

    const SolveOutcome outcome = solve_linear(system);
    if (outcome.status == SolveStatus::kInconsistent) {
      std::ostringstream os;
      os << "solve_complex: degree " << d << " inconsistent at equation "
         << outcome.witness_equation << " with residual " << outcome.witness_residual;
      throw SolverError(os.str());
    }
    if (outcome.status == SolveStatus::kUnderdetermined) {
      std::ostringstream os;
      os << "solve_complex: degree " << d << " underdetermined; free keys:";
      for (int f : outcome.free_unknowns) {
        const auto& k = keys[static_cast<std::size_t>(f)];
        os << " (" << k.degree << "," << k.lines << "," << k.points << ")";
      }
      throw SolverError(os.str());
    }
    for (std::size_t i = 0; i < keys.size(); ++i) store.set(keys[i], *outcome.values[i]);
    store.seal(d);
  }
  return store;
}

SweepReport complex_residual_sweep(const TargetModel& model, const ComplexStore& store,
                                   int max_degree) {
  SweepReport report;
  for (int d = 2; d <= max_degree; ++d) {
    for_each_complex_instance(model, store, d, kDivisorCap, /*unknown_degree=*/-1,
                              [&](ComplexWdvvInstance&& inst) {
                                ++report.instance_count;
                                if (!report.ok) return;
                                if (!inst.relation.constant_part().is_zero()) {
                                  report.ok = false;
                                  std::ostringstream os;
                                  os << "WDVV(" << inst.a << "," << inst.b << "," << inst.c << ","
                                     << inst.e << ") d=" << d
                                     << " residual=" << inst.relation.constant_part();
                                  report.first_failure = os.str();
                                }
                              });
  }
  return report;
}

}  // namespace realgw
