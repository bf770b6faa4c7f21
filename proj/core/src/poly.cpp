#include "sixv/poly.hpp"

#include "sixv/errors.hpp"

namespace sixv {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational& c, int power) {
  if (c.is_zero()) return Poly();
  std::vector<Rational> v(static_cast<size_t>(power) + 1, Rational(0));
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& Poly::coeff(int k) const {
  static const Rational zero(0);
  if (k < 0 || static_cast<size_t>(k) >= c_.size()) return zero;
  return c_[static_cast<size_t>(k)];
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (Rational& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    for (size_t j = 0; j < o.c_.size(); ++j) {
      r[i + j] += c_[i] * o.c_[j];
    }
  }
  return Poly(std::move(r));
}

Poly Poly::operator*(const Rational& s) const {
  Poly r = *this;
  for (Rational& c : r.c_) c *= s;
  r.trim();
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> r(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) {
    r[k - 1] = c_[k] * Rational(static_cast<long long>(k));
  }
  return Poly(std::move(r));
}

Rational Poly::eval(const Rational& x) const {
  Rational r(0);
  for (size_t k = c_.size(); k-- > 0;) {
    r = r * x + c_[k];
  }
  return r;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += c_[k].to_string();
    if (k >= 1) out += "*" + var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace sixv
