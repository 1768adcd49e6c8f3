#include "realgw/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace realgw {

bool SeriesTruncation::admits(const Exponent& e) const {
  int t_total = 0;
  for (int j = 0; j < t_count; ++j) {
    if (e[static_cast<std::size_t>(j)] < 0) return false;
    t_total += e[static_cast<std::size_t>(j)];
  }
  const int u = e[static_cast<std::size_t>(t_count)];
  const int q = e[static_cast<std::size_t>(t_count) + 1];
  return t_total <= t_total_cap && u >= 0 && u <= u_cap && q >= 0 && q <= q_cap;
}

SeriesTruncation SeriesTruncation::meet(const SeriesTruncation& a, const SeriesTruncation& b) {
  if (a.t_count != b.t_count)
    throw std::invalid_argument("TruncatedSeries: variable set mismatch");
  return SeriesTruncation{a.t_count, std::min(a.t_total_cap, b.t_total_cap),
                          std::min(a.u_cap, b.u_cap), std::min(a.q_cap, b.q_cap)};
}

void TruncatedSeries::check_exponent(const Exponent& e) const {
  if (e.size() != trunc_.var_count())
    throw std::invalid_argument("TruncatedSeries: exponent arity mismatch");
}

TruncatedSeries TruncatedSeries::monomial(const SeriesTruncation& trunc, const Exponent& e,
                                          const Rational& coeff) {
  TruncatedSeries s(trunc);
  s.add_term(e, coeff);
  return s;
}

void TruncatedSeries::add_term(const Exponent& e, const Rational& coeff) {
  check_exponent(e);
  if (coeff.is_zero() || !trunc_.admits(e)) return;
  auto [it, fresh] = terms_.emplace(e, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational TruncatedSeries::coefficient(const Exponent& e) const {
  check_exponent(e);
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  TruncatedSeries r(SeriesTruncation::meet(trunc_, o.trunc_));
  for (const auto& [e, c] : terms_) r.add_term(e, c);
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  TruncatedSeries r(SeriesTruncation::meet(trunc_, o.trunc_));
  for (const auto& [e, c] : terms_) r.add_term(e, c);
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  TruncatedSeries r(SeriesTruncation::meet(trunc_, o.trunc_));
  const std::size_t vars = r.trunc_.var_count();
  Exponent sum(vars, 0);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      for (std::size_t j = 0; j < vars; ++j) sum[j] = e1[j] + e2[j];
      if (!r.trunc_.admits(sum)) continue;
      r.add_term(sum, c1 * c2);
    }
  }
  return r;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& s) const {
  TruncatedSeries r(trunc_);
  if (s.is_zero()) return r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
  return r;
}

TruncatedSeries TruncatedSeries::partial_t(int j) const {
  if (j < 0 || j >= trunc_.t_count)
    throw std::invalid_argument("TruncatedSeries::partial_t: no such variable");
  SeriesTruncation t = trunc_;
  t.t_total_cap = std::max(0, t.t_total_cap - 1);
  TruncatedSeries r(t);
  for (const auto& [e, c] : terms_) {
    const int k = e[static_cast<std::size_t>(j)];
    if (k == 0) continue;
    Exponent d = e;
    --d[static_cast<std::size_t>(j)];
    r.add_term(d, c * Rational(k));
  }
  return r;
}

TruncatedSeries TruncatedSeries::partial_u() const {
  SeriesTruncation t = trunc_;
  t.u_cap = std::max(0, t.u_cap - 1);
  TruncatedSeries r(t);
  const std::size_t upos = static_cast<std::size_t>(trunc_.t_count);
  for (const auto& [e, c] : terms_) {
    const int k = e[upos];
    if (k == 0) continue;
    Exponent d = e;
    --d[upos];
    r.add_term(d, c * Rational(k));
  }
  return r;
}

bool TruncatedSeries::is_zero() const { return terms_.empty(); }

std::optional<Exponent> TruncatedSeries::first_nonzero() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::string TruncatedSeries::exponent_to_string(const SeriesTruncation& trunc, const Exponent& e) {
  std::ostringstream os;
  bool any = false;
  const std::size_t upos = static_cast<std::size_t>(trunc.t_count);
  if (e[upos + 1] > 0) {
    os << "q^" << e[upos + 1];
    any = true;
  }
  if (e[upos] > 0) {
    os << (any ? " " : "") << "u^" << e[upos];
    any = true;
  }
  for (int j = 0; j < trunc.t_count; ++j) {
    if (e[static_cast<std::size_t>(j)] > 0) {
      os << (any ? " " : "") << "t" << (j + 1) << "^" << e[static_cast<std::size_t>(j)];
      any = true;
    }
  }
  if (!any) os << "1";
  return os.str();
}

}  // namespace realgw
