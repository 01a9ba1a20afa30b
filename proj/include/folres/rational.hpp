#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace folres {

using Integer = mpz_class;

/// Exact rational number. Always stored reduced with positive denominator;
/// the canonical zero is 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit on purpose
  Rational(const Integer& n) : v_(n) {}
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  static Rational parse(const std::string& text);

  const Integer numerator() const { return v_.get_num(); }
  const Integer denominator() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational inverse() const;

  /// Canonical text form: "p" when integral, else "p/q".
  std::string str() const;

 private:
  mpq_class v_;
};

/// gcd of |a|,|b| as nonnegative rationals: gcd(num)/lcm(den); gcd(0,0)=0.
Rational rational_gcd(const Rational& a, const Rational& b);

std::vector<Rational> parse_rational_vector(const std::string& comma_separated);

}  // namespace folres
