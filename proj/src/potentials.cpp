#include "realgw/potentials.hpp"

#include <sstream>

namespace realgw {

namespace {

Rational multi_factorial(const MultiIndex& lambda) {
  Integer acc(1);
  for (std::size_t j = 0; j < lambda.size(); ++j)
    acc *= factorial(static_cast<unsigned long>(lambda[j]));
  return Rational(acc);
}

struct BasisSlots {
  int unit = -1, divisor = -1, curve = -1, point = -1;
};

BasisSlots basis_slots(const TargetModel& model) {
  BasisSlots s;
  for (int j = 0; j < model.basis_size(); ++j) {
    switch (model.half_degree(j)) {
      case 0: s.unit = j; break;
      case 1: s.divisor = j; break;
      case 2: s.curve = j; break;
      case 3: s.point = j; break;
      default: throw SolverError("potentials: basis half-degree outside 0..3");
    }
  }
  if (s.unit < 0 || s.divisor < 0 || s.curve < 0 || s.point < 0)
    throw SolverError("potentials: basis does not cover half-degrees 0..3");
  return s;
}

Exponent make_exponent(int n, const MultiIndex& lambda, int u, int q) {
  Exponent e(static_cast<std::size_t>(n) + 2, 0);
  for (int j = 0; j < n; ++j) e[static_cast<std::size_t>(j)] = lambda[static_cast<std::size_t>(j)];
  e[static_cast<std::size_t>(n)] = u;
  e[static_cast<std::size_t>(n) + 1] = q;
  return e;
}

}  // namespace

Rational omega_weight(int k, const MultiIndex& lambda) {
  const int l = lambda.total();
  const Rational two_power =
      l >= 1 ? Rational(Integer(1), int_pow(Integer(2), static_cast<unsigned>(l - 1)))
             : Rational(2);
  return two_power / (Rational(factorial(static_cast<unsigned long>(k))) * multi_factorial(lambda));
}

Rational phi_weight(const MultiIndex& lambda) { return Rational(1) / multi_factorial(lambda); }

PotentialPair build_potentials(const TargetModel& model, const ComplexStore& cstore,
                               const RealStore& rstore, const PotentialCaps& caps) {
  const int n = model.basis_size();
  const BasisSlots slots = basis_slots(model);
  if (rstore.solved_up_to() < caps.q_cap)
    throw NotSolvedError("build_potentials: real store not solved to the q cap");

  SeriesTruncation trunc{n, caps.t_cap, caps.u_cap(), caps.q_cap};
  TruncatedSeries phi(trunc);
  TruncatedSeries omega(trunc);

  // phi, classical part: the cubic intersection form, coefficient of t^lambda
  // is <mu^lambda, [X]> / lambda! over |lambda| = 3.
  {
    // enumerate multisets {i <= j <= k} of basis indices
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        for (int k = j; k < n; ++k) {
          const Rational tri = model.triple_intersection(i, j, k);
          if (tri.is_zero()) continue;
          MultiIndex lambda(static_cast<std::size_t>(n));
          ++lambda[static_cast<std::size_t>(i)];
          ++lambda[static_cast<std::size_t>(j)];
          ++lambda[static_cast<std::size_t>(k)];
          phi.add_term(make_exponent(n, lambda, 0, 0), tri * phi_weight(lambda));
        }
  }

  // phi, quantum part: degree d' with q-exponent doubling(d').
  for (int dp = 1;; ++dp) {
    const int q_exp = model.doubling(DegreeClass{dp}).value;
    if (q_exp > caps.q_cap) break;
    if (dp > cstore.solved_up_to())
      throw NotSolvedError("build_potentials: complex store not solved to the q cap");
    const int gate = model.ell_omega(DegreeClass{dp});  // lam2 + 2*lam3
    for (int lam3 = 0; 2 * lam3 <= gate; ++lam3) {
      const int lam2 = gate - 2 * lam3;
      for (int lam1 = 0; lam1 + lam2 + lam3 <= caps.t_cap; ++lam1) {
        MultiIndex lambda(static_cast<std::size_t>(n));
        lambda[static_cast<std::size_t>(slots.divisor)] = lam1;
        lambda[static_cast<std::size_t>(slots.curve)] = lam2;
        lambda[static_cast<std::size_t>(slots.point)] = lam3;
        const Rational value = Rational(dp).pow(static_cast<unsigned>(lam1)) *
                               cstore.invariant(dp, lam2, lam3);
        if (value.is_zero()) continue;
        phi.add_term(make_exponent(n, lambda, 0, q_exp), value * phi_weight(lambda));
      }
    }
  }

  // omega, degree-0 part: only the fundamental-class slot <1>_{0,1} = 1
  // survives, contributing u * t_unit.
  {
    MultiIndex lambda(static_cast<std::size_t>(n));
    ++lambda[static_cast<std::size_t>(slots.unit)];
    omega.add_term(make_exponent(n, lambda, 1, 0), omega_weight(1, lambda));
  }

  // omega, positive degrees.
  for (int d = 1; d <= caps.q_cap; ++d) {
    const int budget = model.ell_omega(DegreeClass{d}) / 2;  // lam2 + 2*lam3 <= budget
    for (int lam3 = 0; 2 * lam3 <= budget; ++lam3)
      for (int lam2 = 0; lam2 + 2 * lam3 <= budget; ++lam2) {
        const int k = budget - lam2 - 2 * lam3;
        const Rational base = rstore.invariant(d, lam2, lam3);
        if (base.is_zero()) continue;
        for (int lam1 = 0; lam1 + lam2 + lam3 <= caps.t_cap; ++lam1) {
          MultiIndex lambda(static_cast<std::size_t>(n));
          lambda[static_cast<std::size_t>(slots.divisor)] = lam1;
          lambda[static_cast<std::size_t>(slots.curve)] = lam2;
          lambda[static_cast<std::size_t>(slots.point)] = lam3;
          const Rational value = Rational(d).pow(static_cast<unsigned>(lam1)) * base;
          omega.add_term(make_exponent(n, lambda, k, d), value * omega_weight(k, lambda));
        }
      }
  }

  return PotentialPair{std::move(phi), std::move(omega), caps};
}

TruncatedSeries pde_residual_m12(const TargetModel& model, const PotentialPair& pair, int a,
                                 int b) {
  const int n = model.basis_size();
  const TruncatedSeries phi_ab = pair.phi.partial_t(a).partial_t(b);
  const TruncatedSeries omega_u = pair.omega.partial_u();

  TruncatedSeries acc = pair.omega.partial_t(a).partial_t(b) * omega_u.partial_u();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational g = model.pairing_inverse(i, j);
      if (g.is_zero()) continue;
      acc = acc + (phi_ab.partial_t(i) * omega_u.partial_t(j)).scaled(g);
    }
  return acc - omega_u.partial_t(a) * omega_u.partial_t(b);
}

TruncatedSeries pde_residual_m03(const TargetModel& model, const PotentialPair& pair, int a,
                                 int b, int c) {
  const int n = model.basis_size();
  const TruncatedSeries phi_a = pair.phi.partial_t(a);
  const TruncatedSeries omega_u = pair.omega.partial_u();
  const TruncatedSeries omega_a = pair.omega.partial_t(a);

  TruncatedSeries acc = omega_a.partial_t(b) * omega_u.partial_t(c);
  acc = acc - omega_a.partial_t(c) * omega_u.partial_t(b);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational g = model.pairing_inverse(i, j);
      if (g.is_zero()) continue;
      acc = acc + (phi_a.partial_t(b).partial_t(i) * pair.omega.partial_t(c).partial_t(j)).scaled(g);
      acc = acc - (phi_a.partial_t(c).partial_t(i) * pair.omega.partial_t(b).partial_t(j)).scaled(g);
    }
  return acc;
}

std::vector<PdeReport> verify_all_pdes(const TargetModel& model, const PotentialPair& pair) {
  std::vector<PdeReport> reports;
  const int n = model.basis_size();
  auto record = [&](const std::string& name, const TruncatedSeries& residual) {
    PdeReport r;
    r.relation = name;
    if (!residual.is_zero()) {
      r.ok = false;
      r.first_offender = TruncatedSeries::exponent_to_string(residual.truncation(),
                                                             *residual.first_nonzero());
    }
    reports.push_back(std::move(r));
  };
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      std::ostringstream os;
      os << "M12(" << model.basis_label(a) << "," << model.basis_label(b) << ")";
      record(os.str(), pde_residual_m12(model, pair, a, b));
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        std::ostringstream os;
        os << "M03(" << model.basis_label(a) << "," << model.basis_label(b) << ","
           << model.basis_label(c) << ")";
        record(os.str(), pde_residual_m03(model, pair, a, b, c));
      }
  return reports;
}

}  // namespace realgw
