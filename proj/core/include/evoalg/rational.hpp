#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "evoalg/errors.hpp"

namespace evoalg {

/// Exact rational scalar over an arbitrary-precision integer pair.
///
/// Values are always canonical (positive denominator, coprime parts), so
/// equality and the zero test are exact structural checks. Immutable value
/// type; safe to copy and share across threads.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long numerator) : value_(numerator) {}
  Rational(long numerator, long denominator);

  /// Parses "p" or "p/q": optional sign on p, q a positive integer.
  /// Throws InputError mentioning `bad rational literal` on anything else,
  /// including a zero denominator.
  static Rational parse(std::string_view text);

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  /// Canonical text form, "p" or "p/q". parse(str()) round-trips exactly.
  std::string str() const { return value_.get_str(); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.value_ + b.value_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.value_ - b.value_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.value_ * b.value_));
  }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_cmp(a.value_.get_mpq_t(), b.value_.get_mpq_t()) == 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.value_.get_mpq_t(), b.value_.get_mpq_t()) < 0;
  }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;  // invariant: canonical form
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace evoalg
