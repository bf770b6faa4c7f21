#include <cstdint>
#include <random>

#include "doctest.h"
#include "sixv/bigint.hpp"
#include "sixv/errors.hpp"
#include "sixv/rational.hpp"

using namespace sixv;

TEST_CASE("bigint basic arithmetic and strings") {
  CHECK(BigInt(0).to_string() == "0");
  CHECK(BigInt(-1).to_string() == "-1");
  CHECK((BigInt(1000000007) * BigInt(998244353)).to_string() == "998244359987710471");
  CHECK(BigInt::from_string("-12345678901234567890").to_string() == "-12345678901234567890");
  CHECK(BigInt::from_string("12345678901234567890") + BigInt::from_string("-12345678901234567890") ==
        BigInt(0));
  CHECK(factorial(20) == BigInt(2432902008176640000LL));
  CHECK(factorial(30).to_string() == "265252859812191058636308480000000");
  CHECK(binomial(52, 5) == BigInt(2598960));
  CHECK(binomial(100, 50).to_string() == "100891344545564193334812497256");
  CHECK(pow(BigInt(3), 40u).to_string() == "12157665459056928801");
  CHECK(BigInt::from_string("123").to_int64() == 123LL);
  CHECK(BigInt(-9223372036854775807LL - 1).to_int64() == -9223372036854775807LL - 1);
}

TEST_CASE("bigint divmod agrees with int128 on random inputs") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 2000; ++t) {
    auto draw = [&](int bits) {
      int64_t v = static_cast<int64_t>(rng() >> (64 - bits));
      return (rng() & 1) ? -v : v;
    };
    const int64_t a = draw(62);
    int64_t b = draw(t % 2 ? 62 : 20);
    if (b == 0) b = 7;
    BigInt q, r;
    BigInt::divmod(BigInt(a), BigInt(b), q, r);
    CHECK(q == BigInt(a / b));
    CHECK(r == BigInt(a % b));
    CHECK(q * BigInt(b) + r == BigInt(a));
  }
}

TEST_CASE("bigint divmod reconstruction on wide operands") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    BigInt a = 1, b = 1;
    for (int i = 0; i < 6; ++i) a *= BigInt(static_cast<long long>(rng() >> 1));
    for (int i = 0; i < (t % 5) + 1; ++i) b *= BigInt(static_cast<long long>(rng() >> 1) | 1);
    if (t % 3 == 0) a = -a;
    if (t % 4 == 0) b = -b;
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(abs(r) < abs(b));
    if (!r.is_zero()) CHECK(r.sign() == a.sign());
  }
}

TEST_CASE("divexact flags non-exact division") {
  CHECK(BigInt(84).divexact(BigInt(7)) == BigInt(12));
  CHECK_THROWS_AS((void)BigInt(85).divexact(BigInt(7)), NonIntegerQuotient);
  // divisor whose top limb has the high bit set (no normalization shift);
  // the zero remainder must still come back canonical
  BigInt den = BigInt::from_string("18438836272496640000");
  BigInt num = den * BigInt::from_string("26845508690");
  CHECK(num.divexact(den) == BigInt::from_string("26845508690"));
}

TEST_CASE("gcd") {
  CHECK(gcd(BigInt(462), BigInt(1071)) == BigInt(21));
  CHECK(gcd(factorial(20), factorial(15)) == factorial(15));
  CHECK(gcd(BigInt(0), BigInt(-5)) == BigInt(5));
}

TEST_CASE("rational arithmetic stays reduced") {
  Rational half(BigInt(1), BigInt(2));
  Rational third(BigInt(1), BigInt(3));
  CHECK((half + third).to_string() == "5/6");
  CHECK((half * third).to_string() == "1/6");
  CHECK((half - half).is_zero());
  CHECK((Rational(BigInt(4), BigInt(6))).to_string() == "2/3");
  CHECK((Rational(BigInt(4), BigInt(-6))).to_string() == "-2/3");
  CHECK((half / third).to_string() == "3/2");
  CHECK(pow(Rational(BigInt(2), BigInt(3)), -2).to_string() == "9/4");
  CHECK(Rational(5) > Rational(BigInt(9), BigInt(2)));
}

TEST_CASE("generalized binomial over rationals") {
  // (2/3 choose 1) = 2/3, (4/3 choose 2) = (4/3)(1/3)/2 = 2/9
  CHECK(generalized_binomial(Rational(BigInt(2), BigInt(3)), 1).to_string() == "2/3");
  CHECK(generalized_binomial(Rational(BigInt(4), BigInt(3)), 2).to_string() == "2/9");
  CHECK(generalized_binomial(Rational(BigInt(4), BigInt(3)), 0) == Rational(1));
  CHECK(generalized_binomial(Rational(7), 3) == Rational(35));
}
