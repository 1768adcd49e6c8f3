#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "realgw/rational.hpp"

namespace realgw {

/// Multi-index over the target basis: one non-negative count per generator.
class MultiIndex {
 public:
  explicit MultiIndex(std::size_t n) : entries_(n, 0) {}
  MultiIndex(std::initializer_list<int> e) : entries_(e) { check_non_negative(); }
  explicit MultiIndex(std::vector<int> e) : entries_(std::move(e)) { check_non_negative(); }

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t j) const { return entries_[j]; }
  int& operator[](std::size_t j) { return entries_[j]; }
  const std::vector<int>& entries() const { return entries_; }

  /// |lambda|: sum of the entries.
  int total() const {
    int s = 0;
    for (int e : entries_) s += e;
    return s;
  }

  /// ||lambda||: sum weighted by the basis half-degrees.
  int weighted_total(std::span<const int> half_degrees) const {
    if (half_degrees.size() != entries_.size())
      throw std::invalid_argument("MultiIndex: weight vector length mismatch");
    int s = 0;
    for (std::size_t j = 0; j < entries_.size(); ++j) s += entries_[j] * half_degrees[j];
    return s;
  }

  /// Componentwise alpha <= *this.
  bool contains(const MultiIndex& alpha) const {
    if (alpha.size() != size()) return false;
    for (std::size_t j = 0; j < size(); ++j)
      if (alpha[j] > entries_[j]) return false;
    return true;
  }

  /// Componentwise difference; defined only when contains(alpha).
  MultiIndex minus(const MultiIndex& alpha) const {
    if (!contains(alpha)) throw std::invalid_argument("MultiIndex: subtraction would go negative");
    MultiIndex r(size());
    for (std::size_t j = 0; j < size(); ++j) r[j] = entries_[j] - alpha[j];
    return r;
  }

  MultiIndex plus_one(std::size_t j) const {
    MultiIndex r = *this;
    ++r[j];
    return r;
  }

  bool is_zero() const { return total() == 0; }

  /// Visits every alpha with alpha <= *this (componentwise), in odometer order.
  template <class F>
  void for_each_sub(F&& visit) const {
    MultiIndex alpha(size());
    while (true) {
      visit(static_cast<const MultiIndex&>(alpha));
      std::size_t j = 0;
      for (; j < size(); ++j) {
        if (alpha[j] < entries_[j]) {
          ++alpha[j];
          break;
        }
        alpha[j] = 0;
      }
      if (j == size()) return;
    }
  }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return !(a == b); }

 private:
  void check_non_negative() const {
    for (int e : entries_)
      if (e < 0) throw std::invalid_argument("MultiIndex: negative entry");
  }

  std::vector<int> entries_;
};

/// Product of componentwise binomial coefficients C(lambda_j, alpha_j).
/// Rejects alpha not componentwise <= lambda.
inline Rational multi_binomial(const MultiIndex& lambda, const MultiIndex& alpha) {
  if (!lambda.contains(alpha))
    throw std::invalid_argument("multi_binomial: alpha exceeds lambda componentwise");
  Integer r(1);
  for (std::size_t j = 0; j < lambda.size(); ++j)
    r *= binomial(static_cast<unsigned long>(lambda[j]), static_cast<unsigned long>(alpha[j]));
  return Rational(r);
}

}  // namespace realgw
