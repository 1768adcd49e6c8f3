#include <doctest.h>

#include <random>
#include <vector>

#include "realgw/linear_system.hpp"
#include "realgw/multi_index.hpp"
#include "realgw/rational.hpp"

using namespace realgw;

TEST_CASE("rationals normalize eagerly and stay exact") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(1, -2).denominator() == 2);
  CHECK(Rational(-6, -4).numerator() == 3);
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(1, 3) * Rational(3)) == Rational(1));
  CHECK(Rational(0).is_zero());
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);

  CHECK(Rational::from_string("-22/7").to_string() == "-22/7");
  CHECK(Rational::from_string("80160").to_string() == "80160");
  CHECK_THROWS_AS(Rational::from_string("1/x"), std::invalid_argument);
  CHECK(Rational(3, 2).pow(3) == Rational(27, 8));
}

TEST_CASE("multi_binomial matches its examples and rejects bad input") {
  CHECK(multi_binomial(MultiIndex{2, 1}, MultiIndex{1, 0}) == Rational(2));
  CHECK(multi_binomial(MultiIndex{0, 0}, MultiIndex{0, 0}) == Rational(1));
  CHECK(multi_binomial(MultiIndex{3, 2}, MultiIndex{2, 1}) == Rational(6));
  CHECK_THROWS_AS(multi_binomial(MultiIndex{1, 0}, MultiIndex{0, 1}), std::invalid_argument);
}

TEST_CASE("multi_binomial against a hand-built Pascal triangle") {
  // Independent oracle: Pascal's rule, no factorials.
  int pascal[8][8] = {};
  for (int n = 0; n < 8; ++n) {
    pascal[n][0] = 1;
    for (int r = 1; r <= n; ++r) pascal[n][r] = pascal[n - 1][r - 1] + (r <= n - 1 ? pascal[n - 1][r] : 0);
  }
  const MultiIndex lambda{3, 2, 4};
  lambda.for_each_sub([&](const MultiIndex& alpha) {
    Integer expect(1);
    for (std::size_t j = 0; j < lambda.size(); ++j)
      expect *= pascal[lambda[j]][alpha[j]];
    CHECK(multi_binomial(lambda, alpha) == Rational(expect));
    // symmetry: C(lambda, alpha) == C(lambda, lambda - alpha)
    CHECK(multi_binomial(lambda, alpha) == multi_binomial(lambda, lambda.minus(alpha)));
  });
}

TEST_CASE("multi-index sums and iteration") {
  const MultiIndex lambda{0, 2, 1, 3};
  CHECK(lambda.total() == 6);
  const std::vector<int> degs{0, 1, 2, 3};
  CHECK(lambda.weighted_total(degs) == 2 + 2 + 9);
  int count = 0;
  lambda.for_each_sub([&](const MultiIndex&) { ++count; });
  CHECK(count == 1 * 3 * 2 * 4);
  CHECK_THROWS_AS(MultiIndex{1}.minus(MultiIndex{2}), std::invalid_argument);
}

namespace {

RationalLinearSystem make_system(int n, std::vector<LinearEquation> eqs) {
  RationalLinearSystem s(n);
  for (auto& e : eqs) s.add_equation(std::move(e));
  return s;
}

}  // namespace

TEST_CASE("solve_linear pins the textbook examples exactly") {
  // x + y = 3, x - y = 1
  auto s = make_system(2, {{{{0, 1}, {1, 1}}, Rational(3)}, {{{0, 1}, {1, -1}}, Rational(1)}});
  auto out = solve_linear(s);
  REQUIRE(out.status == SolveStatus::kSolved);
  CHECK(*out.values[0] == Rational(2));
  CHECK(*out.values[1] == Rational(1));
  CHECK(zero_residuals(s, {Rational(2), Rational(1)}));

  // 2x = 1 stays exact
  auto s2 = make_system(1, {{{{0, 2}}, Rational(1)}});
  auto out2 = solve_linear(s2);
  REQUIRE(out2.status == SolveStatus::kSolved);
  CHECK(*out2.values[0] == Rational(1, 2));
}

TEST_CASE("redundant consistent equations give a unique value with zero residuals") {
  // One unknown, five scaled copies of x = 7/3.
  std::vector<LinearEquation> eqs;
  for (int k = 1; k <= 5; ++k)
    eqs.push_back({{{0, Rational(k)}}, Rational(7 * k, 3)});
  auto s = make_system(1, std::move(eqs));
  auto out = solve_linear(s);
  REQUIRE(out.status == SolveStatus::kSolved);
  CHECK(*out.values[0] == Rational(7, 3));
  CHECK(zero_residuals(s, {Rational(7, 3)}));
}

TEST_CASE("inconsistency reports the offending equation") {
  auto s = make_system(1, {{{{0, 1}}, Rational(1)}, {{{0, 1}}, Rational(2)}});
  auto out = solve_linear(s);
  REQUIRE(out.status == SolveStatus::kInconsistent);
  CHECK(out.witness_equation == 1);
  CHECK(!out.witness_residual.is_zero());
}

TEST_CASE("underdetermined systems report the free unknowns") {
  auto s = make_system(2, {{{{0, 1}, {1, 1}}, Rational(3)}});
  auto out = solve_linear(s);
  REQUIRE(out.status == SolveStatus::kUnderdetermined);
  CHECK(out.free_unknowns.size() == 1);
  CHECK(!out.values[0].has_value());
}

TEST_CASE("random consistent systems solve with exactly zero residuals") {
  std::minstd_rand rng(20240817);
  auto coin = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); };
  for (int trial = 0; trial < 25; ++trial) {
    const int n = coin(1, 5);
    std::vector<Rational> truth;
    for (int i = 0; i < n; ++i) truth.emplace_back(coin(-6, 6), coin(1, 4));
    std::vector<LinearEquation> eqs;
    for (int e = 0; e < n + 3; ++e) {
      LinearEquation eq;
      Rational rhs(0);
      for (int i = 0; i < n; ++i) {
        const Rational c(coin(-3, 3));
        if (c.is_zero()) continue;
        eq.coefficients.emplace_back(i, c);
        rhs += c * truth[static_cast<std::size_t>(i)];
      }
      eq.rhs = rhs;
      eqs.push_back(std::move(eq));
    }
    auto s = make_system(n, std::move(eqs));
    auto out = solve_linear(s);
    REQUIRE(out.status != SolveStatus::kInconsistent);
    std::vector<Rational> values;
    if (out.status == SolveStatus::kSolved) {
      for (int i = 0; i < n; ++i) values.push_back(*out.values[static_cast<std::size_t>(i)]);
      CHECK(zero_residuals(s, values));
      CHECK(values == truth);
    }
  }
}
