#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "rectlay/errors.hpp"

namespace rectlay {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational kept in lowest terms with a positive
/// denominator. All layout coordinates and aspect ratios use this type;
/// the core never touches floating point.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int n) : num_(n), den_(1) {}            // NOLINT(runtime/explicit)
  Rational(long long n) : num_(n), den_(1) {}      // NOLINT(runtime/explicit)
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt n, BigInt d);

  /// Accepts "123", "-4" or "p/q". Returns nullopt on malformed input.
  static std::optional<Rational> parse(std::string_view s);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_positive() const { return num_ > 0; }
  bool is_integer() const { return den_ == 1; }

  Rational reciprocal() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }

  /// "p/q", or just "p" when the denominator is 1.
  std::string to_string() const;

  /// Decimal string with the given number of significant digits
  /// (round half to even). Only used at rendering boundaries.
  std::string to_decimal(int significant_digits) const;

  double to_double() const;

 private:
  void normalize();

  BigInt num_;
  BigInt den_;  // > 0
};

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);
Rational abs(const Rational& a);

}  // namespace rectlay
