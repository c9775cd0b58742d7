#include "rectlay/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <sstream>

namespace rectlay {

namespace {
BigInt big_gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}
}  // namespace

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_ == 0) throw Error("Rational: zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = big_gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::optional<Rational> Rational::parse(std::string_view s) {
  auto parse_int = [](std::string_view t) -> std::optional<BigInt> {
    if (t.empty()) return std::nullopt;
    std::size_t i = 0;
    bool neg = false;
    if (t[0] == '-' || t[0] == '+') {
      neg = t[0] == '-';
      i = 1;
    }
    if (i == t.size()) return std::nullopt;
    BigInt v = 0;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return std::nullopt;
      v = v * 10 + (t[i] - '0');
    }
    return neg ? BigInt(-v) : v;
  };
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    auto n = parse_int(s);
    if (!n) return std::nullopt;
    return Rational(std::move(*n));
  }
  auto n = parse_int(s.substr(0, slash));
  auto d = parse_int(s.substr(slash + 1));
  if (!n || !d || *d == 0) return std::nullopt;
  return Rational(std::move(*n), std::move(*d));
}

Rational Rational::reciprocal() const {
  if (num_ == 0) throw Error("Rational: reciprocal of zero");
  return Rational(den_, num_);
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw Error("Rational: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::string Rational::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

std::string Rational::to_decimal(int significant_digits) const {
  if (significant_digits < 1) significant_digits = 1;
  if (num_ == 0) return "0";
  BigInt n = num_ < 0 ? BigInt(-num_) : num_;
  const BigInt& d = den_;
  // exponent e: smallest power of 10 with n/d < 10^e
  int e = 0;
  BigInt lo = n, hi = d;  // compare n/d with 10^e by cross-multiplying
  while (lo >= hi) {  // n/d >= 10^e
    hi *= 10;
    ++e;
  }
  while (true) {  // ensure n/d >= 10^(e-1)
    BigInt scaled = n;
    if (e - 1 >= 0) {
      BigInt p = 1;
      for (int i = 0; i < e - 1; ++i) p *= 10;
      if (n >= p * d) break;
    } else {
      BigInt p = 1;
      for (int i = 0; i < 1 - e; ++i) p *= 10;
      if (n * p >= d) break;
    }
    --e;
  }
  // digits = round(n/d * 10^(significant_digits - e)) with half-to-even
  int shift = significant_digits - e;
  BigInt scaled_num = n, scaled_den = d;
  if (shift >= 0) {
    BigInt p = 1;
    for (int i = 0; i < shift; ++i) p *= 10;
    scaled_num *= p;
  } else {
    BigInt p = 1;
    for (int i = 0; i < -shift; ++i) p *= 10;
    scaled_den *= p;
  }
  BigInt q = scaled_num / scaled_den;
  BigInt r = scaled_num % scaled_den;
  BigInt twice = r * 2;
  if (twice > scaled_den || (twice == scaled_den && q % 2 != 0)) ++q;
  std::string digits = q.str();
  // q may have gained a digit from rounding (e.g. 999.995 -> 1000.00)
  if (static_cast<int>(digits.size()) > significant_digits) {
    digits.pop_back();
    ++e;
  }
  std::string out;
  if (num_ < 0) out += "-";
  if (e <= 0) {
    out += "0.";
    for (int i = 0; i < -e; ++i) out += "0";
    out += digits;
  } else if (e >= static_cast<int>(digits.size())) {
    out += digits;
    for (int i = 0; i < e - static_cast<int>(digits.size()); ++i) out += "0";
  } else {
    out += digits.substr(0, e) + "." + digits.substr(e);
  }
  // trim trailing zeros after a decimal point
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return out;
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
Rational abs(const Rational& a) { return a.is_negative() ? -a : a; }

}  // namespace rectlay
