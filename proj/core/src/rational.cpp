#include "sixv/rational.hpp"

#include <ostream>
#include <utility>

#include "sixv/errors.hpp"

namespace sixv {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error("Rational: zero denominator");
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  reduce();
}

void Rational::reduce() {
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  BigInt g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_.divexact(g);
    den_ = den_.divexact(g);
  }
}

std::string Rational::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

double Rational::to_double() const { return num_.to_double() / den_.to_double(); }

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  reduce();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("Rational: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  reduce();
  return *this;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  return num_ * o.den_ <=> o.num_ * den_;
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

Rational pow(Rational base, int exp) {
  if (exp < 0) return Rational(1) / pow(std::move(base), -exp);
  Rational r = 1;
  while (exp) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

Rational generalized_binomial(const Rational& alpha, int m) {
  if (m < 0) return 0;
  Rational r = 1;
  for (int j = 0; j < m; ++j) {
    r *= (alpha - Rational(j)) / Rational(m - j);
  }
  return r;
}

}  // namespace sixv
