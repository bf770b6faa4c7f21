#include "sixv/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>

#include "sixv/errors.hpp"

namespace sixv {

namespace {
constexpr uint64_t kBase = uint64_t{1} << 32;
}

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  // Avoid overflow on LLONG_MIN by negating in unsigned space.
  uint64_t mag = v < 0 ? ~static_cast<uint64_t>(v) + 1 : static_cast<uint64_t>(v);
  limbs_.push_back(static_cast<uint32_t>(mag & 0xffffffffu));
  if (mag >> 32) limbs_.push_back(static_cast<uint32_t>(mag >> 32));
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  const auto& lo = a.size() >= b.size() ? b : a;
  const auto& hi = a.size() >= b.size() ? a : b;
  std::vector<uint32_t> r(hi.size() + 1, 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < hi.size(); ++i) {
    uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
    r[i] = static_cast<uint32_t>(s & 0xffffffffu);
    carry = s >> 32;
  }
  r[hi.size()] = static_cast<uint32_t>(carry);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  std::vector<uint32_t> r(a.size(), 0);
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t d = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (d < 0) {
      d += static_cast<int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r[i] = static_cast<uint32_t>(d);
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < b.size(); ++j) {
      uint64_t cur = r[i + j] + static_cast<uint64_t>(a[i]) * b[j] + carry;
      r[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    size_t k = i + b.size();
    while (carry) {
      uint64_t cur = r[k] + carry;
      r[k] = static_cast<uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

namespace {

// Magnitude helpers for Knuth-style long division.
std::vector<uint32_t> shl_bits(const std::vector<uint32_t>& a, unsigned s) {
  if (s == 0 || a.empty()) return a;
  std::vector<uint32_t> r(a.size() + 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    r[i] |= a[i] << s;
    r[i + 1] = static_cast<uint32_t>(static_cast<uint64_t>(a[i]) >> (32 - s));
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<uint32_t> shr_bits(const std::vector<uint32_t>& a, unsigned s) {
  if (s == 0 || a.empty()) {
    std::vector<uint32_t> r = a;  // inputs may carry leading zero limbs
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }
  std::vector<uint32_t> r(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] >> s;
    if (i + 1 < a.size()) r[i] |= static_cast<uint32_t>(static_cast<uint64_t>(a[i + 1]) << (32 - s));
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

void short_div(const std::vector<uint32_t>& a, uint32_t d, std::vector<uint32_t>& q,
               uint32_t& rem) {
  q.assign(a.size(), 0);
  uint64_t r = 0;
  for (size_t i = a.size(); i-- > 0;) {
    uint64_t cur = (r << 32) | a[i];
    q[i] = static_cast<uint32_t>(cur / d);
    r = cur % d;
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
  rem = static_cast<uint32_t>(r);
}

}  // namespace

void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
  if (b.empty()) throw Error("BigInt: division by zero");
  if (cmp_mag(a, b) < 0) {
    q.clear();
    r = a;
    return;
  }
  if (b.size() == 1) {
    uint32_t rem;
    short_div(a, b[0], q, rem);
    r.clear();
    if (rem) r.push_back(rem);
    return;
  }

  // Knuth algorithm D, base 2^32.
  const unsigned shift = std::countl_zero(b.back());
  std::vector<uint32_t> u = shl_bits(a, shift);
  const std::vector<uint32_t> v = shl_bits(b, shift);
  const size_t n = v.size();
  const size_t m = u.size() - n;
  u.resize(u.size() + 1, 0);  // u[m+n] participates in the top step
  q.assign(m + 1, 0);

  const uint64_t vtop = v[n - 1];
  const uint64_t vsecond = v[n - 2];
  for (size_t j = m + 1; j-- > 0;) {
    uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
    uint64_t qhat = num / vtop;
    uint64_t rhat = num % vtop;
    if (qhat >= kBase) {
      qhat = kBase - 1;
      rhat = num - qhat * vtop;
    }
    while (rhat < kBase && qhat * vsecond > ((rhat << 32) | u[j + n - 2])) {
      --qhat;
      rhat += vtop;
    }
    // Multiply-subtract qhat * v from u[j .. j+n].
    int64_t borrow = 0;
    uint64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
      uint64_t p = qhat * v[i] + carry;
      carry = p >> 32;
      int64_t d = static_cast<int64_t>(u[i + j]) - borrow - static_cast<int64_t>(p & 0xffffffffu);
      if (d < 0) {
        d += static_cast<int64_t>(kBase);
        borrow = 1;
      } else {
        borrow = 0;
      }
      u[i + j] = static_cast<uint32_t>(d);
    }
    int64_t d = static_cast<int64_t>(u[j + n]) - borrow - static_cast<int64_t>(carry);
    bool negative = d < 0;
    u[j + n] = static_cast<uint32_t>(d + (negative ? static_cast<int64_t>(kBase) : 0));
    if (negative) {
      // qhat was one too large; add v back.
      --qhat;
      uint64_t c = 0;
      for (size_t i = 0; i < n; ++i) {
        uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c;
        u[i + j] = static_cast<uint32_t>(s & 0xffffffffu);
        c = s >> 32;
      }
      u[j + n] = static_cast<uint32_t>(u[j + n] + c);
    }
    q[j] = static_cast<uint32_t>(qhat);
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
  u.resize(n);
  r = shr_bits(u, shift);
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
  if (o.sign_ == 0) return *this;
  if (sign_ == 0) return *this = o;
  if (sign_ == o.sign_) {
    limbs_ = add_mag(limbs_, o.limbs_);
  } else {
    int c = cmp_mag(limbs_, o.limbs_);
    if (c == 0) {
      limbs_.clear();
      sign_ = 0;
    } else if (c > 0) {
      limbs_ = sub_mag(limbs_, o.limbs_);
    } else {
      limbs_ = sub_mag(o.limbs_, limbs_);
      sign_ = o.sign_;
    }
  }
  trim();
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt& BigInt::operator*=(const BigInt& o) {
  sign_ *= o.sign_;
  limbs_ = mul_mag(limbs_, o.limbs_);
  trim();
  return *this;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  std::vector<uint32_t> qm, rm;
  divmod_mag(a.limbs_, b.limbs_, qm, rm);
  q.limbs_ = std::move(qm);
  q.sign_ = q.limbs_.empty() ? 0 : a.sign_ * b.sign_;
  r.limbs_ = std::move(rm);
  r.sign_ = r.limbs_.empty() ? 0 : a.sign_;
}

BigInt& BigInt::operator/=(const BigInt& o) {
  BigInt q, r;
  divmod(*this, o, q, r);
  return *this = std::move(q);
}

BigInt& BigInt::operator%=(const BigInt& o) {
  BigInt q, r;
  divmod(*this, o, q, r);
  return *this = std::move(r);
}

BigInt BigInt::divexact(const BigInt& d) const {
  BigInt q, r;
  divmod(*this, d, q, r);
  if (!r.is_zero()) {
    throw NonIntegerQuotient("BigInt::divexact: " + to_string() + " not divisible by " +
                             d.to_string());
  }
  return q;
}

std::strong_ordering BigInt::operator<=>(const BigInt& o) const {
  if (sign_ != o.sign_) return sign_ <=> o.sign_;
  int c = cmp_mag(limbs_, o.limbs_) * sign_;
  return c <=> 0;
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  std::vector<uint32_t> mag = limbs_;
  std::string digits;
  while (!mag.empty()) {
    std::vector<uint32_t> q;
    uint32_t rem;
    short_div(mag, 1000000000u, q, rem);
    mag = std::move(q);
    for (int i = 0; i < 9; ++i) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

BigInt BigInt::from_string(const std::string& s) {
  size_t i = 0;
  int sign = 1;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    if (s[i] == '-') sign = -1;
    ++i;
  }
  if (i == s.size()) throw Error("BigInt: empty numeral");
  BigInt r;
  for (; i < s.size();) {
    // Consume up to 9 digits at a time.
    uint32_t chunk = 0;
    int len = 0;
    while (i < s.size() && len < 9) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
        throw Error("BigInt: bad digit in numeral: " + s);
      }
      chunk = chunk * 10 + static_cast<uint32_t>(s[i] - '0');
      ++i;
      ++len;
    }
    uint32_t scale = 1;
    for (int k = 0; k < len; ++k) scale *= 10;
    r *= BigInt(scale);
    r += BigInt(chunk);
  }
  if (sign < 0) r = -r;
  return r;
}

double BigInt::to_double() const {
  double v = 0;
  for (size_t i = limbs_.size(); i-- > 0;) v = v * 4294967296.0 + limbs_[i];
  return sign_ < 0 ? -v : v;
}

long long BigInt::to_int64() const {
  if (limbs_.size() > 2) throw OutOfRange("BigInt::to_int64: value too large");
  uint64_t mag = 0;
  for (size_t i = limbs_.size(); i-- > 0;) mag = (mag << 32) | limbs_[i];
  if (sign_ >= 0) {
    if (mag > static_cast<uint64_t>(std::numeric_limits<long long>::max())) {
      throw OutOfRange("BigInt::to_int64: value too large");
    }
    return static_cast<long long>(mag);
  }
  if (mag > static_cast<uint64_t>(std::numeric_limits<long long>::max()) + 1) {
    throw OutOfRange("BigInt::to_int64: value too small");
  }
  return static_cast<long long>(~mag + 1);
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

BigInt abs(const BigInt& v) { return v.sign() < 0 ? -v : v; }

BigInt gcd(BigInt a, BigInt b) {
  a = abs(a);
  b = abs(b);
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BigInt pow(BigInt base, unsigned exp) {
  BigInt r = 1;
  while (exp) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

BigInt factorial(int n) {
  if (n < 0) throw OutOfRange("factorial: negative argument");
  BigInt r = 1;
  for (int k = 2; k <= n; ++k) r *= BigInt(k);
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= BigInt(n - k + i);
    r = r.divexact(BigInt(i));
  }
  return r;
}

}  // namespace sixv
