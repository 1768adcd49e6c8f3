#include <doctest.h>

#include "realgw/target.hpp"

using namespace realgw;

TEST_CASE("p3 model basics") {
  const TargetModel& m = p3_target();
  CHECK(m.id() == "p3");
  CHECK(m.basis_size() == 4);
  CHECK(m.half_degrees() == std::vector<int>{0, 1, 2, 3});
  CHECK(m.basis_label(2) == "h^2");
}

TEST_CASE("pairing matrix is symmetric and its inverse is exact") {
  const TargetModel& m = p3_target();
  const int n = m.basis_size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      CHECK(m.pairing(i, j) == m.pairing(j, i));
      Rational acc(0);
      for (int k = 0; k < n; ++k) acc += m.pairing_inverse(i, k) * m.pairing(k, j);
      CHECK(acc == Rational(i == j ? 1 : 0));
    }
}

TEST_CASE("phi action signs follow the half-degree parity") {
  const TargetModel& m = p3_target();
  for (int j = 0; j < m.basis_size(); ++j)
    CHECK(m.phi_sign(j) == (m.half_degree(j) % 2 == 0 ? 1 : -1));
}

TEST_CASE("ell_omega values and additivity") {
  const TargetModel& m = p3_target();
  CHECK(m.ell_omega(DegreeClass{1}) == 4);
  CHECK(m.ell_omega(DegreeClass{0}) == 0);
  CHECK(m.ell_omega(DegreeClass{3}) == 12);
  for (int x = -2; x <= 3; ++x)
    for (int y = -2; y <= 3; ++y)
      CHECK(m.ell_omega(DegreeClass{x + y}) == m.ell_omega(DegreeClass{x}) + m.ell_omega(DegreeClass{y}));
}

TEST_CASE("doubling and Z2-triviality") {
  const TargetModel& m = p3_target();
  CHECK(m.doubling(DegreeClass{1}) == DegreeClass{2});
  CHECK(m.doubling(DegreeClass{0}) == DegreeClass{0});
  CHECK(m.doubling(DegreeClass{3}) == DegreeClass{6});
  CHECK(m.z2_trivial(DegreeClass{2}));
  CHECK(!m.z2_trivial(DegreeClass{1}));
  CHECK(m.z2_trivial(DegreeClass{0}));
}

TEST_CASE("triple intersections are the cup-product integrals") {
  const TargetModel& m = p3_target();
  CHECK(m.triple_intersection(0, 0, 3) == Rational(1));
  CHECK(m.triple_intersection(1, 1, 1) == Rational(1));
  CHECK(m.triple_intersection(1, 2, 0) == Rational(1));
  CHECK(m.triple_intersection(2, 2, 0) == Rational(0));
  CHECK(m.triple_intersection(3, 3, 3) == Rational(0));
}
