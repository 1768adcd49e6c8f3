#include "realgw/real_wdvv.hpp"

#include <algorithm>
#include <sstream>

#include "realgw/linear_system.hpp"

namespace realgw {

namespace {

struct BasisSlots {
  int unit;
  int divisor;
  int curve;
  int point;
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
      default: throw SolverError("real_wdvv: basis half-degree outside 0..3");
    }
    if (*slot != -1) throw SolverError("real_wdvv: repeated half-degree in basis");
    *slot = j;
  }
  if (s.unit < 0 || s.divisor < 0 || s.curve < 0 || s.point < 0)
    throw SolverError("real_wdvv: basis does not cover half-degrees 0..3");
  return s;
}

constexpr int kDivisorCap = 2;

}  // namespace

std::string to_string(const RealKey& key) {
  std::ostringstream os;
  os << "<lt^" << key.lines << " pt^" << key.points << ">_" << key.degree
     << "(k=" << key.real_points() << ")";
  return os.str();
}

Rational RealStore::invariant(int degree, int lines, int points) const {
  if (degree > solved_up_to_) {
    std::ostringstream os;
    os << "RealStore: degree " << degree << " not solved (have " << solved_up_to_ << ")";
    throw NotSolvedError(os.str());
  }
  if (degree < 0 || lines < 0 || points < 0) return Rational(0);
  const RealKey key{degree, lines, points};
  if (key.real_points() < 0) return Rational(0);
  if ((degree + lines) % 2 == 0) return Rational(0);
  auto it = values_.find(key);
  if (it == values_.end()) throw NotSolvedError("RealStore: key missing from sealed degree");
  return it->second;
}

void RealStore::set(const RealKey& key, Rational value) {
  if ((key.degree + key.lines) % 2 == 0 && !value.is_zero())
    throw SolverError("RealStore: nonzero value on a parity-vanishing key " + to_string(key));
  values_[key] = std::move(value);
}

void RealStore::seal(int degree) { solved_up_to_ = degree; }

NormalizeResult normalize(const TargetModel& model, int degree, const MultiIndex& insertions,
                          int k) {
  NormalizeResult r;
  if (degree < 0) return r;
  const BasisSlots slots = basis_slots(model);
  const int n_unit = insertions[static_cast<std::size_t>(slots.unit)];
  const int total = insertions.total();
  if (degree == 0) {
    // The whole degree-0 functional is zero except <1>_{0,1,1} = <1,[pt]> = 1.
    if (k == 1 && total == 1 && n_unit == 1) {
      r.kind = NormalizeResult::Kind::kScalar;
      r.factor = Rational(1);
    }
    return r;
  }
  if (n_unit > 0) return r;
  // Insertions in H^2_+ or H^4_- would vanish here as well; the P^3-family
  // basis has no such generators, so there is nothing to strip.
  Rational mult(1);
  const int divisors = insertions[static_cast<std::size_t>(slots.divisor)];
  if (divisors > 0) mult = Rational(degree).pow(static_cast<unsigned>(divisors));
  const RealKey key{degree, insertions[static_cast<std::size_t>(slots.curve)],
                    insertions[static_cast<std::size_t>(slots.point)]};
  if (k != key.real_points() || k < 0) return r;
  if ((key.degree + key.lines) % 2 == 0) return r;  // parity vanishing
  r.kind = NormalizeResult::Kind::kKey;
  r.factor = mult;
  r.key = key;
  return r;
}

LinearExpr<RealKey> real_eval(const TargetModel& model, const RealSolveView& view, int degree,
                              const MultiIndex& insertions, int k) {
  using Expr = LinearExpr<RealKey>;
  const NormalizeResult n = normalize(model, degree, insertions, k);
  switch (n.kind) {
    case NormalizeResult::Kind::kZero: return Expr();
    case NormalizeResult::Kind::kScalar: return Expr::constant(n.factor);
    case NormalizeResult::Kind::kKey: break;
  }
  if (view.symbolic(n.key)) return Expr::unknown(n.key, n.factor);
  if (view.store == nullptr) throw SolverError("real_eval: no store to resolve " + to_string(n.key));
  return Expr::constant(n.factor * view.store->invariant(n.key.degree, n.key.lines, n.key.points));
}

namespace {

// Shared core of the two relations. Computes
//   sum_{B0 + d(B') = B} sum_{alpha+beta=lambda} 2^{|alpha|} C(lambda,alpha)
//     sum_{i,j} <mu_a mu_b mu_i mu^alpha>^X_{B'} g^{ij} <mu_j extra mu^beta>_{B0,k}
// where `extra` is empty (first relation) or one distinguished insertion c
// (the Psi contraction of the second relation).
LinearExpr<RealKey> mixed_sum(const TargetModel& model, const ComplexStore& cstore,
                              const RealSolveView& view, int a, int b, std::optional<int> extra,
                              int degree, int k, const MultiIndex& lambda) {
  LinearExpr<RealKey> acc;
  const int n = model.basis_size();
  for (int dp = 0; 2 * dp <= degree; ++dp) {
    // Real-side class B0 = degree - doubling(dp); only the rank-one lattice
    // is enumerated here.
    const int b0 = degree - model.doubling(DegreeClass{dp}).value;
    lambda.for_each_sub([&](const MultiIndex& alpha) {
      const MultiIndex beta = lambda.minus(alpha);
      const Rational w =
          multi_binomial(lambda, alpha) * Rational(2).pow(static_cast<unsigned>(alpha.total()));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const Rational g = model.pairing_inverse(i, j);
          if (g.is_zero()) continue;
          const Rational cplx =
              complex_invariant(model, cstore, dp,
                                alpha.plus_one(static_cast<std::size_t>(a))
                                    .plus_one(static_cast<std::size_t>(b))
                                    .plus_one(static_cast<std::size_t>(i)));
          if (cplx.is_zero()) continue;
          MultiIndex real_ins = beta.plus_one(static_cast<std::size_t>(j));
          if (extra) real_ins = real_ins.plus_one(static_cast<std::size_t>(*extra));
          acc += real_eval(model, view, b0, real_ins, k).scaled(w * g * cplx);
        }
    });
  }
  return acc;
}

// sum over B1+B2=degree, k1+k2=ksplit, alpha+beta=lambda of
//   C(ksplit,k1) C(lambda,alpha)
//   <mu_a mu_b mu^alpha>_{B1,k1} <[mu_c] mu^beta>_{B2,k2+shift2}
// with left insertions (a[,b]) and right insertion c optional.
LinearExpr<RealKey> split_sum(const TargetModel& model, const RealSolveView& view, int a,
                              std::optional<int> b, std::optional<int> c, int degree, int ksplit,
                              int shift1, int shift2, const MultiIndex& lambda) {
  LinearExpr<RealKey> acc;
  for (int d1 = 0; d1 <= degree; ++d1) {
    const int d2 = degree - d1;
    for (int k1 = 0; k1 <= ksplit; ++k1) {
      const int k2 = ksplit - k1;
      const Rational kw{binomial(static_cast<unsigned long>(ksplit), static_cast<unsigned long>(k1))};
      lambda.for_each_sub([&](const MultiIndex& alpha) {
        const MultiIndex beta = lambda.minus(alpha);
        const Rational w = kw * multi_binomial(lambda, alpha);
        MultiIndex left = alpha.plus_one(static_cast<std::size_t>(a));
        if (b) left = left.plus_one(static_cast<std::size_t>(*b));
        const auto lhs = real_eval(model, view, d1, left, k1 + shift1);
        if (lhs.is_zero()) return;
        MultiIndex right = beta;
        if (c) right = right.plus_one(static_cast<std::size_t>(*c));
        const auto rhs = real_eval(model, view, d2, right, k2 + shift2);
        if (rhs.is_zero()) return;
        acc += lhs.times(rhs).scaled(w);
      });
    }
  }
  return acc;
}

int gate_k_m12(const TargetModel& model, int a, int b, int degree, const MultiIndex& lambda) {
  const auto& hdeg = model.half_degrees();
  return model.ell_omega(DegreeClass{degree}) / 2 - hdeg[static_cast<std::size_t>(a)] -
         hdeg[static_cast<std::size_t>(b)] - lambda.weighted_total(hdeg) + lambda.total() + 1;
}

int gate_k_m03(const TargetModel& model, int a, int b, int c, int degree,
               const MultiIndex& lambda) {
  const auto& hdeg = model.half_degrees();
  return model.ell_omega(DegreeClass{degree}) / 2 - hdeg[static_cast<std::size_t>(a)] -
         hdeg[static_cast<std::size_t>(b)] - hdeg[static_cast<std::size_t>(c)] -
         lambda.weighted_total(hdeg) + lambda.total() + 2;
}

}  // namespace

std::optional<LinearInstance> m12_instance(const TargetModel& model, const ComplexStore& cstore,
                                           const RealSolveView& view, int a, int b, int degree,
                                           const MultiIndex& lambda) {
  const int k = gate_k_m12(model, a, b, degree, lambda);
  if (k < 1) return std::nullopt;

  LinearInstance inst;
  {
    std::ostringstream os;
    os << "M12(" << model.basis_label(a) << "," << model.basis_label(b) << ") d=" << degree
       << " k=" << k;
    inst.relation_tag = os.str();
  }
  inst.degree = degree;
  inst.k = k;
  inst.lambda = lambda;

  LinearExpr<RealKey> rel = mixed_sum(model, cstore, view, a, b, std::nullopt, degree, k, lambda);
  // Two-disk splittings: k-1 real points distributed over the halves, the
  // cut point adding one real point to each receiving side.
  rel += split_sum(model, view, a, b, std::nullopt, degree, k - 1, 0, 2, lambda);
  rel -= split_sum(model, view, a, std::nullopt, b, degree, k - 1, 1, 1, lambda);
  inst.relation = std::move(rel);
  return inst;
}

std::optional<LinearInstance> m03_instance(const TargetModel& model, const ComplexStore& cstore,
                                           const RealSolveView& view, int a, int b, int c,
                                           int degree, const MultiIndex& lambda) {
  const int k = gate_k_m03(model, a, b, c, degree, lambda);
  if (k < 0) return std::nullopt;

  LinearInstance inst;
  {
    std::ostringstream os;
    os << "M03(" << model.basis_label(a) << "," << model.basis_label(b) << ","
       << model.basis_label(c) << ") d=" << degree << " k=" << k;
    inst.relation_tag = os.str();
  }
  inst.degree = degree;
  inst.k = k;
  inst.lambda = lambda;

  // Psi_{a,b;c} - Psi_{a,c;b}.
  LinearExpr<RealKey> rel = mixed_sum(model, cstore, view, a, b, c, degree, k, lambda);
  rel += split_sum(model, view, a, b, c, degree, k, 0, 1, lambda);
  rel -= mixed_sum(model, cstore, view, a, c, b, degree, k, lambda);
  rel -= split_sum(model, view, a, c, b, degree, k, 0, 1, lambda);
  inst.relation = std::move(rel);
  return inst;
}

void for_each_real_instance(const TargetModel& model, const ComplexStore& cstore,
                            const RealSolveView& view, int degree, int divisor_cap,
                            const std::function<void(LinearInstance&&)>& visit) {
  const int n = model.basis_size();
  const BasisSlots slots = basis_slots(model);
  const auto& hdeg = model.half_degrees();
  const int ell_half = model.ell_omega(DegreeClass{degree}) / 2;

  auto lambdas = [&](int deg_budget, auto&& body) {
    // lambda2 + 2*lambda3 <= deg_budget keeps the gate k in range; the
    // divisor slot does not move the gate.
    for (int lam3 = 0; 2 * lam3 <= deg_budget; ++lam3)
      for (int lam2 = 0; lam2 + 2 * lam3 <= deg_budget; ++lam2)
        for (int lam1 = 0; lam1 <= divisor_cap; ++lam1) {
          MultiIndex lambda(static_cast<std::size_t>(n));
          lambda[static_cast<std::size_t>(slots.divisor)] = lam1;
          lambda[static_cast<std::size_t>(slots.curve)] = lam2;
          lambda[static_cast<std::size_t>(slots.point)] = lam3;
          body(lambda);
        }
  };

  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {  // first relation is symmetric in (a, b)
      const int budget =
          ell_half - hdeg[static_cast<std::size_t>(a)] - hdeg[static_cast<std::size_t>(b)];
      if (budget < 0) continue;
      lambdas(budget, [&](const MultiIndex& lambda) {
        if (auto inst = m12_instance(model, cstore, view, a, b, degree, lambda))
          visit(std::move(*inst));
      });
    }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {  // antisymmetric in (b, c); b == c trivial
        const int budget = ell_half + 2 - hdeg[static_cast<std::size_t>(a)] -
                           hdeg[static_cast<std::size_t>(b)] - hdeg[static_cast<std::size_t>(c)];
        if (budget < 0) continue;
        lambdas(budget, [&](const MultiIndex& lambda) {
          if (auto inst = m03_instance(model, cstore, view, a, b, c, degree, lambda))
            visit(std::move(*inst));
        });
      }
}

namespace {

std::vector<RealKey> tier_keys(const TargetModel& model, int degree) {
  std::vector<RealKey> keys;
  const int budget = model.ell_omega(DegreeClass{degree}) / 2;
  for (int a = 0; a <= budget; ++a)
    for (int b = 0; a + 2 * b <= budget; ++b) keys.push_back(RealKey{degree, a, b});
  return keys;
}

struct TierOutcome {
  std::map<RealKey, Rational> solved;
  std::set<RealKey> still_free;
};

TierOutcome solve_tier(const TargetModel& model, const ComplexStore& cstore,
                       const RealStore& store,
                       int degree, const std::set<RealKey>& carried, int seed_sign) {
  std::vector<RealKey> keys = tier_keys(model, degree);
  keys.insert(keys.end(), carried.begin(), carried.end());
  std::map<RealKey, int> index;
  for (std::size_t i = 0; i < keys.size(); ++i) index[keys[i]] = static_cast<int>(i);

  RealSolveView view{&store, degree, &carried};
  RationalLinearSystem system(static_cast<int>(keys.size()));
  std::vector<std::string> tags;
  for_each_real_instance(model, cstore, view, degree, kDivisorCap, [&](LinearInstance&& inst) {
    if (inst.relation.is_zero()) return;
    LinearEquation eq;
    eq.rhs = -inst.relation.constant_part();
    for (const auto& [key, coeff] : inst.relation.terms())
      eq.coefficients.emplace_back(index.at(key), coeff);
    system.add_equation(std::move(eq));
    tags.push_back(std::move(inst.relation_tag));
  });

  // Parity-vanishing keys enter as explicit constraints; their consistency
  // with the relation corpus is checked by the shared elimination.
  for (const auto& key : keys) {
    if ((key.degree + key.lines) % 2 == 0) {
      LinearEquation eq;
      eq.coefficients.emplace_back(index.at(key), Rational(1));
      system.add_equation(std::move(eq));
      tags.push_back("parity " + to_string(key));
    }
  }
  if (degree == 1) {
    LinearEquation eq;
    eq.coefficients.emplace_back(index.at(RealKey{1, 0, 0}), Rational(1));
    eq.rhs = Rational(seed_sign);
    system.add_equation(std::move(eq));
    tags.push_back("seed");
  }

  const SolveOutcome outcome = solve_linear(system);
  if (outcome.status == SolveStatus::kInconsistent) {
    std::ostringstream os;
    os << "solve_real: degree " << degree << " tier inconsistent; witness "
       << tags[static_cast<std::size_t>(outcome.witness_equation)] << " residual "
       << outcome.witness_residual;
    throw SolverError(os.str());
  }

  TierOutcome tier;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (outcome.values[i])
      tier.solved.emplace(keys[i], *outcome.values[i]);
    else
      tier.still_free.insert(keys[i]);
  }
  return tier;
}

}  // namespace

RealStore solve_real(const TargetModel& model, const ComplexStore& cstore, int max_degree,
                     int seed_sign) {
  if (max_degree < 1) throw SolverError("solve_real: max_degree must be >= 1");
  if (seed_sign != 1 && seed_sign != -1) throw SolverError("solve_real: seed must be +1 or -1");
  if (cstore.solved_up_to() < max_degree)
    throw SolverError("solve_real: complex store not solved far enough");

  RealStore store(seed_sign);
  std::set<RealKey> carried;
  // One tier past max_degree pins the keys the relations only reach from the
  // next degree (the degree-1 k=0 family, each odd-degree bare key).
  for (int d = 1; d <= max_degree + 1; ++d) {
    if (d > max_degree && carried.empty()) break;
    TierOutcome tier = solve_tier(model, cstore, store, d, carried, seed_sign);
    carried.clear();
    for (const auto& [key, value] : tier.solved)
      if (key.degree <= max_degree) store.set(key, value);
    for (const auto& key : tier.still_free) {
      if (key.degree == d) {
        // A key of the tier's own degree may wait one more tier; beyond
        // max_degree it is not needed at all.
        if (d <= max_degree) carried.insert(key);
      } else {
        std::ostringstream os;
        os << "solve_real: degree " << d << " tier leaves " << to_string(key)
           << " free beyond its deferral window";
        throw SolverError(os.str());
      }
    }
    if (d <= max_degree) store.seal(d);
  }
  if (!carried.empty()) {
    std::ostringstream os;
    os << "solve_real: unresolved keys after final tier:";
    for (const auto& key : carried) os << " " << to_string(key);
    throw SolverError(os.str());
  }
  return store;
}

SweepReport real_residual_sweep(const TargetModel& model, const ComplexStore& cstore,
                                const RealStore& rstore, int max_degree) {
  SweepReport report;
  RealSolveView view{&rstore, -1, nullptr};
  for (int d = 1; d <= max_degree; ++d) {
    for_each_real_instance(model, cstore, view, d, kDivisorCap, [&](LinearInstance&& inst) {
      ++report.instance_count;
      if (!report.ok) return;
      if (!inst.relation.constant_part().is_zero()) {
        report.ok = false;
        std::ostringstream os;
        os << inst.relation_tag << " residual=" << inst.relation.constant_part();
        report.first_failure = os.str();
      }
    });
  }
  return report;
}

}  // namespace realgw
