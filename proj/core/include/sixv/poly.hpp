#pragma once

#include <string>
#include <vector>

#include "sixv/rational.hpp"

namespace sixv {

// Dense univariate polynomial with exact rational coefficients, ascending
// powers, trailing zeros trimmed.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);

  static Poly monomial(const Rational& c, int power);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Rational& coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& s) const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  Poly derivative() const;
  Rational eval(const Rational& x) const;

  bool operator==(const Poly& o) const = default;

  std::string to_string(const std::string& var = "t") const;

 private:
  std::vector<Rational> c_;
  void trim();
};

}  // namespace sixv
