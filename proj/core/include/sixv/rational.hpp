#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "sixv/bigint.hpp"

namespace sixv {

// Exact rational with BigInt numerator and positive BigInt denominator,
// always kept in lowest terms.  In the closed-form module the denominators
// are powers of 3 from the generalized binomial arguments, but nothing here
// assumes that.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
  Rational(BigInt num) : num_(std::move(num)), den_(1) {}
  Rational(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_.is_one(); }
  int sign() const { return num_.sign(); }

  std::string to_string() const;
  double to_double() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  bool operator==(const Rational& o) const = default;
  std::strong_ordering operator<=>(const Rational& o) const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& v);

 private:
  BigInt num_;
  BigInt den_;  // > 0

  void reduce();
};

Rational pow(Rational base, int exp);

// Generalized binomial (alpha choose m) = prod_{j=0}^{m-1} (alpha - j) / (m - j),
// evaluated over exact rationals.  Never goes through floating point.
Rational generalized_binomial(const Rational& alpha, int m);

}  // namespace sixv
