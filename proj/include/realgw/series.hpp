#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "realgw/rational.hpp"

namespace realgw {

/// Exponent layout: [t_1 .. t_N, u, q].
using Exponent = std::vector<int>;

/// Per-variable caps for u and q plus a total-degree cap across the t block.
/// A cap of 0 keeps the variable constant, which is how a series that does
/// not mention u at all is represented.
struct SeriesTruncation {
  int t_count = 0;
  int t_total_cap = 0;
  int u_cap = 0;
  int q_cap = 0;

  std::size_t var_count() const { return static_cast<std::size_t>(t_count) + 2; }
  bool admits(const Exponent& e) const;
  /// Componentwise minimum: the region where a product/sum of two exact
  /// series is still exact.
  static SeriesTruncation meet(const SeriesTruncation& a, const SeriesTruncation& b);
  friend bool operator==(const SeriesTruncation&, const SeriesTruncation&) = default;
};

/// Multivariate formal power series over Q, truncated per SeriesTruncation.
/// Exact below its caps; immutable value semantics.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(SeriesTruncation trunc) : trunc_(trunc) {}

  static TruncatedSeries monomial(const SeriesTruncation& trunc, const Exponent& e,
                                  const Rational& coeff);

  const SeriesTruncation& truncation() const { return trunc_; }

  /// Accumulates coeff onto the term at e; silently drops beyond caps.
  void add_term(const Exponent& e, const Rational& coeff);

  Rational coefficient(const Exponent& e) const;

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries scaled(const Rational& s) const;

  /// d/dt_j; the t-total cap of the result shrinks by one.
  TruncatedSeries partial_t(int j) const;
  /// d/du; the u cap of the result shrinks by one.
  TruncatedSeries partial_u() const;

  bool is_zero() const;
  std::size_t term_count() const { return terms_.size(); }
  /// Smallest nonzero exponent in (q, u, t...) lexicographic order.
  std::optional<Exponent> first_nonzero() const;

  // Key comparison: (q, u, t lex) ascending, so iteration order matches the
  // "lowest offending exponent" convention in failure reports.
  struct Order {
    bool operator()(const Exponent& a, const Exponent& b) const {
      const std::size_t n = a.size();
      if (a[n - 1] != b[n - 1]) return a[n - 1] < b[n - 1];  // q
      if (a[n - 2] != b[n - 2]) return a[n - 2] < b[n - 2];  // u
      for (std::size_t j = 0; j + 2 < n; ++j)
        if (a[j] != b[j]) return a[j] < b[j];
      return false;
    }
  };
  using TermMap = std::map<Exponent, Rational, Order>;

  /// Terms in deterministic (q, u, t...) order.
  const TermMap& terms() const { return terms_; }

  static std::string exponent_to_string(const SeriesTruncation&, const Exponent&);

 private:
  void check_exponent(const Exponent& e) const;

  SeriesTruncation trunc_;
  TermMap terms_;
};

}  // namespace realgw
