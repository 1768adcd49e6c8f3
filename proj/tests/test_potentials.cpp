#include <doctest.h>

#include <random>

#include "realgw/potentials.hpp"

using namespace realgw;

namespace {

struct Solved {
  ComplexStore cplx;
  RealStore real;
};

const Solved& solved3() {
  static const Solved s = [] {
    ComplexStore c = solve_complex(p3_target(), 3);
    RealStore r = solve_real(p3_target(), c, 3, +1);
    return Solved{std::move(c), std::move(r)};
  }();
  return s;
}

Exponent make_exp(const MultiIndex& lambda, int u, int q) {
  Exponent e(6, 0);
  for (std::size_t j = 0; j < 4; ++j) e[j] = lambda[j];
  e[4] = u;
  e[5] = q;
  return e;
}

}  // namespace

TEST_CASE("omega coefficients carry the 2^{1-l} u^k/k! lambda! weights") {
  const auto& s = solved3();
  const PotentialCaps caps{2, 4};
  const auto pair = build_potentials(p3_target(), s.cplx, s.real, caps);
  // <>_1 sits at q^1 u^2 with weight 2^{1-0}/2! = 1
  CHECK(pair.omega.coefficient(make_exp(MultiIndex{0, 0, 0, 0}, 2, 1)) == Rational(1));
  // <pt>_1 = -1 at q^1 u^0 t3^1 with weight 2^{1-1}/0!1! = 1
  CHECK(pair.omega.coefficient(make_exp(MultiIndex{0, 0, 0, 1}, 0, 1)) == Rational(-1));
  // the fundamental-class special term u t0
  CHECK(pair.omega.coefficient(make_exp(MultiIndex{1, 0, 0, 0}, 1, 0)) == Rational(1));
  // divisor variable: <h lt>_2 = 2 * 1 sits at q^2 u^3 t1 t2 (k = 3) with
  // weight 2^{1-2}/3! = 1/12
  CHECK(pair.omega.coefficient(make_exp(MultiIndex{0, 1, 1, 0}, 3, 2)) == Rational(2, 12));
}

TEST_CASE("omega slots violating the dimension pinning are absent") {
  const auto& s = solved3();
  const auto pair = build_potentials(p3_target(), s.cplx, s.real, PotentialCaps{3, 5});
  for (const auto& [e, coeff] : pair.omega.terms()) {
    CHECK(!coeff.is_zero());
    const int q = e[5], u = e[4];
    if (q == 0) {
      CHECK(e == make_exp(MultiIndex{1, 0, 0, 0}, 1, 0));
      continue;
    }
    CHECK(e[0] == 0);
    CHECK(u == 2 * q - e[2] - 2 * e[3]);  // k is pinned by the insertions
    CHECK((q + e[2]) % 2 == 1);           // parity vanishing
  }
}

TEST_CASE("phi has only even q-powers and the classical cubic block") {
  const auto& s = solved3();
  const auto pair = build_potentials(p3_target(), s.cplx, s.real, PotentialCaps{3, 6});
  bool saw_quantum = false;
  for (const auto& [e, coeff] : pair.phi.terms()) {
    CHECK(e[5] % 2 == 0);
    CHECK(e[4] == 0);  // no u dependence
    if (e[5] == 0) {
      CHECK(e[0] + e[1] + e[2] + e[3] == 3);  // cubic intersection form
    } else {
      saw_quantum = true;
      CHECK(e[0] == 0);
    }
  }
  CHECK(saw_quantum);
  // <1,h,h^2>_0 = 1 with weight 1/lambda! = 1
  CHECK(pair.phi.coefficient(make_exp(MultiIndex{1, 1, 1, 0}, 0, 0)) == Rational(1));
  // <h,h,h>_0 = 1 with weight 1/3! = 1/6
  CHECK(pair.phi.coefficient(make_exp(MultiIndex{0, 3, 0, 0}, 0, 0)) == Rational(1, 6));
  // <(h^2)^4>_1 = 2 at q^2 with weight 1/4! = 1/12
  CHECK(pair.phi.coefficient(make_exp(MultiIndex{0, 0, 4, 0}, 0, 2)) == Rational(2, 24));
}

TEST_CASE("derivatives of omega match term-by-term hand differentiation") {
  const auto& s = solved3();
  const auto pair = build_potentials(p3_target(), s.cplx, s.real, PotentialCaps{2, 5});
  const auto d23 = pair.omega.partial_t(2).partial_t(3);
  for (const auto& [e, coeff] : d23.terms()) {
    Exponent src = e;
    src[2] += 1;
    src[3] += 1;
    CHECK(coeff == Rational(src[2]) * Rational(src[3]) * pair.omega.coefficient(src));
  }
  CHECK(!d23.is_zero());
}

TEST_CASE("both equations hold on the generating functions at small caps") {
  const auto& s = solved3();
  const auto pair = build_potentials(p3_target(), s.cplx, s.real, PotentialCaps{2, 5});
  const auto reports = verify_all_pdes(p3_target(), pair);
  CHECK(reports.size() == 10 + 24);
  for (const auto& r : reports) {
    CAPTURE(r.relation);
    CHECK(r.ok);
  }
}

TEST_CASE("the second equation cancels symbolically when its slots repeat") {
  const auto& s = solved3();
  const auto pair = build_potentials(p3_target(), s.cplx, s.real, PotentialCaps{2, 4});
  CHECK(pde_residual_m03(p3_target(), pair, 1, 2, 2).is_zero());
}

TEST_CASE("a corrupted store entry is detected with its lowest offending exponent") {
  const auto& s = solved3();
  RealStore corrupted(+1);
  for (const auto& [key, value] : s.real.entries()) {
    Rational v = value;
    if (key == RealKey{2, 1, 0}) v += Rational(1);
    corrupted.set(key, v);
  }
  corrupted.seal(s.real.solved_up_to());
  const auto pair = build_potentials(p3_target(), s.cplx, corrupted, PotentialCaps{2, 5});
  bool any_bad = false;
  for (const auto& r : verify_all_pdes(p3_target(), pair)) {
    if (!r.ok) {
      any_bad = true;
      CHECK(!r.first_offender.empty());
    }
  }
  CHECK(any_bad);
}

TEST_CASE("residual coefficients reproduce the instance equations exactly") {
  // Convention lock between the series oracle and the coefficient solver:
  // on a corrupted store both must report the same residual, coefficient by
  // coefficient, under the lambda! (k-1)! 2^{|lambda|} rescaling.
  const auto& s = solved3();
  RealStore corrupted(+1);
  for (const auto& [key, value] : s.real.entries()) {
    Rational v = value;
    if (key == RealKey{2, 1, 0}) v += Rational(1);
    if (key == RealKey{1, 0, 1}) v -= Rational(2);
    corrupted.set(key, v);
  }
  corrupted.seal(s.real.solved_up_to());
  const auto pair = build_potentials(p3_target(), s.cplx, corrupted, PotentialCaps{2, 5});
  const TargetModel& m = p3_target();
  RealSolveView view{&corrupted, -1, nullptr};

  std::minstd_rand rng(424242);
  int checked = 0;
  for (int a = 0; a < 4 && checked < 25; ++a)
    for (int b = a; b < 4 && checked < 25; ++b) {
      const auto residual = pde_residual_m12(m, pair, a, b);
      for (int degree = 1; degree <= 2 && checked < 25; ++degree)
        for (int lam2 = 0; lam2 <= 2 && checked < 25; ++lam2)
          for (int lam3 = 0; lam3 <= 1 && checked < 25; ++lam3) {
            if (rng() % 3 == 0) continue;  // sample
            MultiIndex lambda{0, 0, lam2, lam3};
            auto inst = m12_instance(m, s.cplx, view, a, b, degree, lambda);
            if (!inst) continue;
            if (inst->k < 1 || inst->k - 1 > residual.truncation().u_cap) continue;
            if (lam2 + lam3 > residual.truncation().t_total_cap) continue;
            const Rational coeff = residual.coefficient(make_exp(lambda, inst->k - 1, degree));
            const Rational weight =
                Rational(factorial(static_cast<unsigned long>(lam2))) *
                Rational(factorial(static_cast<unsigned long>(lam3))) *
                Rational(factorial(static_cast<unsigned long>(inst->k - 1))) *
                Rational(Integer(1) << lambda.total());
            // instance is fully evaluated under `view`, so its constant part
            // is its residual on the corrupted store
            CHECK(coeff * weight == inst->relation.constant_part());
            ++checked;
          }
    }
  CHECK(checked >= 20);
}
