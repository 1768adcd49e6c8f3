#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace realgw {

using Integer = mpz_class;

/// Exact rational scalar. Always stored in lowest terms with positive
/// denominator (canonicalized on every construction); arithmetic never
/// rounds.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(int n) : value_(n) {}            // NOLINT: implicit by design
  Rational(long n) : value_(static_cast<long>(n)) {}
  Rational(const Integer& n) : value_(n) {}
  Rational(const Integer& num, const Integer& den) : value_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    value_.canonicalize();
  }
  Rational(int num, int den) : Rational(Integer(num), Integer(den)) {}

  /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on junk.
  static Rational from_string(const std::string& text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.value_ = -a.value_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  friend Rational abs(const Rational& a) { Rational r; r.value_ = ::abs(a.value_); return r; }

  Rational pow(unsigned e) const;

  /// "p" when integral, "p/q" otherwise.
  std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class value_;
};

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);
Integer int_pow(const Integer& base, unsigned e);

}  // namespace realgw
