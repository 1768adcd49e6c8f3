#include <doctest.h>

#include <random>

#include "realgw/series.hpp"

using namespace realgw;

namespace {

// Two t variables plus u and q throughout this file.
const SeriesTruncation kTrunc{2, 4, 3, 3};

Exponent exp4(int t1, int t2, int u, int q) { return Exponent{t1, t2, u, q}; }

TruncatedSeries random_series(std::minstd_rand& rng, int max_terms) {
  TruncatedSeries s(kTrunc);
  auto pick = [&](int hi) { return static_cast<int>(rng() % static_cast<unsigned>(hi + 1)); };
  for (int i = 0; i < max_terms; ++i) {
    const int t1 = pick(2), t2 = pick(2);
    if (t1 + t2 > kTrunc.t_total_cap) continue;
    const Exponent e = exp4(t1, t2, pick(2), pick(2));
    const int num = static_cast<int>(rng() % 11) - 5;
    s.add_term(e, Rational(num, 1 + pick(3)));
  }
  return s;
}

}  // namespace

TEST_CASE("partial derivative of u^2 is 2u") {
  auto s = TruncatedSeries::monomial(kTrunc, exp4(0, 0, 2, 0), Rational(1));
  auto du = s.partial_u();
  CHECK(du.coefficient(exp4(0, 0, 1, 0)) == Rational(2));
  CHECK(du.term_count() == 1);
}

TEST_CASE("(1+t1)(1-t1) truncated at total degree 2 is 1 - t1^2") {
  SeriesTruncation t{2, 2, 0, 0};
  TruncatedSeries a(t), b(t);
  a.add_term(exp4(0, 0, 0, 0), Rational(1));
  a.add_term(exp4(1, 0, 0, 0), Rational(1));
  b.add_term(exp4(0, 0, 0, 0), Rational(1));
  b.add_term(exp4(1, 0, 0, 0), Rational(-1));
  auto p = a * b;
  CHECK(p.coefficient(exp4(0, 0, 0, 0)) == Rational(1));
  CHECK(p.coefficient(exp4(1, 0, 0, 0)) == Rational(0));
  CHECK(p.coefficient(exp4(2, 0, 0, 0)) == Rational(-1));
  CHECK(p.term_count() == 2);
}

TEST_CASE("multiplication drops terms beyond the caps") {
  SeriesTruncation t{2, 2, 0, 0};
  TruncatedSeries a(t);
  a.add_term(exp4(1, 0, 0, 0), Rational(1));
  a.add_term(exp4(0, 1, 0, 0), Rational(1));
  auto sq = a * a;       // t1^2 + 2 t1 t2 + t2^2, all at the cap
  CHECK(sq.term_count() == 3);
  auto cube = sq * a;    // everything at total degree 3: gone
  CHECK(cube.is_zero());
}

TEST_CASE("variable-set mismatch is rejected") {
  TruncatedSeries a(kTrunc);
  TruncatedSeries b(SeriesTruncation{3, 4, 3, 3});
  a.add_term(exp4(0, 0, 0, 0), Rational(1));
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK_THROWS_AS(a.coefficient(Exponent{0, 0, 0}), std::invalid_argument);
}

TEST_CASE("ring laws and Leibniz on random series") {
  std::minstd_rand rng(987654);
  for (int trial = 0; trial < 12; ++trial) {
    auto a = random_series(rng, 6);
    auto b = random_series(rng, 6);
    auto c = random_series(rng, 6);
    CHECK(((a * b) * c - a * (b * c)).is_zero());
    CHECK((a * (b + c) - (a * b + a * c)).is_zero());
    CHECK(((a * b) - (b * a)).is_zero());
    // Leibniz rule for both variable kinds
    CHECK(((a * b).partial_t(0) - (a.partial_t(0) * b + a * b.partial_t(0))).is_zero());
    CHECK(((a * b).partial_u() - (a.partial_u() * b + a * b.partial_u())).is_zero());
  }
}

TEST_CASE("first_nonzero respects the (q, u, t) order") {
  TruncatedSeries s(kTrunc);
  s.add_term(exp4(0, 0, 0, 2), Rational(5));
  s.add_term(exp4(2, 0, 1, 1), Rational(7));
  s.add_term(exp4(0, 1, 2, 1), Rational(3));
  auto first = s.first_nonzero();
  REQUIRE(first.has_value());
  CHECK(*first == exp4(2, 0, 1, 1));
  CHECK(TruncatedSeries::exponent_to_string(kTrunc, *first) == "q^1 u^1 t1^2");
}
