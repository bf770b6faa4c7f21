#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sixv {

// Sign-magnitude arbitrary-precision integer over base-2^32 limbs.
//
// The counting tables and the identity suites must never round, and the
// closed-form counts are wanted well past 64 bits (A(50,r) has ~270 digits),
// so the exact substrate is kept in-tree and dependency-free.  Numbers in
// this project stay small (a few hundred digits); schoolbook algorithms are
// entirely adequate.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);  // NOLINT: implicit by design, mirrors int literals
  static BigInt from_string(const std::string& s);

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }
  bool is_one() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }

  std::string to_string() const;
  double to_double() const;
  // Value if it fits in [INT64_MIN, INT64_MAX]; throws OutOfRange otherwise.
  long long to_int64() const;

  BigInt operator-() const;

  BigInt& operator+=(const BigInt& o);
  BigInt& operator-=(const BigInt& o);
  BigInt& operator*=(const BigInt& o);
  BigInt& operator/=(const BigInt& o);  // quotient truncated toward zero
  BigInt& operator%=(const BigInt& o);

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
  friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
  friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }

  // Truncated division with remainder: a = q*b + r, sign(r) = sign(a), |r| < |b|.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

  // Quotient of an exact division; throws NonIntegerQuotient on remainder.
  BigInt divexact(const BigInt& d) const;

  bool operator==(const BigInt& o) const = default;
  std::strong_ordering operator<=>(const BigInt& o) const;

  friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

 private:
  int sign_ = 0;                  // -1, 0, +1; 0 iff limbs_ empty
  std::vector<uint32_t> limbs_;   // little-endian, no leading zeros

  void trim();
  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  // Requires |a| >= |b|.
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

BigInt abs(const BigInt& v);
BigInt gcd(BigInt a, BigInt b);
BigInt pow(BigInt base, unsigned exp);

BigInt factorial(int n);
// Exact binomial for integer arguments, 0 for k < 0 or k > n.
BigInt binomial(int n, int k);

}  // namespace sixv
