#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "realgw/rational.hpp"

namespace realgw {

/// Affine expression constant + sum coeff[key] * x_key, used while a relation
/// instance is being assembled. Multiplication requires at least one constant
/// side; the degree induction guarantees every relation term is linear in the
/// unknowns, and times() throws if that ever fails to hold.
template <class Key>
class LinearExpr {
 public:
  LinearExpr() = default;
  explicit LinearExpr(Rational c) : constant_(std::move(c)) {}

  static LinearExpr constant(Rational c) { return LinearExpr(std::move(c)); }
  static LinearExpr unknown(const Key& k, Rational coeff = Rational(1)) {
    LinearExpr e;
    if (!coeff.is_zero()) e.terms_.emplace(k, std::move(coeff));
    return e;
  }

  bool is_constant() const { return terms_.empty(); }
  bool is_zero() const { return constant_.is_zero() && terms_.empty(); }
  const Rational& constant_part() const { return constant_; }
  const std::map<Key, Rational>& terms() const { return terms_; }

  LinearExpr& operator+=(const LinearExpr& o) {
    constant_ += o.constant_;
    for (const auto& [k, v] : o.terms_) add_term(k, v);
    return *this;
  }
  LinearExpr& operator-=(const LinearExpr& o) {
    constant_ -= o.constant_;
    for (const auto& [k, v] : o.terms_) add_term(k, -v);
    return *this;
  }

  LinearExpr scaled(const Rational& s) const {
    LinearExpr r;
    if (s.is_zero()) return r;
    r.constant_ = constant_ * s;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * s);
    return r;
  }

  LinearExpr times(const LinearExpr& o) const {
    if (is_constant()) return o.scaled(constant_);
    if (o.is_constant()) return scaled(o.constant_);
    throw std::logic_error("LinearExpr: product of two non-constant factors");
  }

  void add_term(const Key& k, const Rational& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = terms_.emplace(k, v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Value under a full assignment.
  template <class Lookup>
  Rational evaluate(Lookup&& lookup) const {
    Rational acc = constant_;
    for (const auto& [k, v] : terms_) acc += v * lookup(k);
    return acc;
  }

 private:
  Rational constant_;
  std::map<Key, Rational> terms_;
};

}  // namespace realgw
