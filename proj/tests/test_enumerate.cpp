#include <cmath>

#include "doctest.h"
#include "sixv/closedform.hpp"
#include "sixv/enumerate.hpp"

using namespace sixv;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kEta3 = 2.0 * kPi / 3.0;
}  // namespace

TEST_CASE("state counts follow the ASM sequence") {
  CHECK(count_states(1) == BigInt(1));
  CHECK(count_states(2) == BigInt(2));
  CHECK(count_states(3) == BigInt(7));
  CHECK(count_states(4) == BigInt(42));
  CHECK(count_states(5) == BigInt(429));
}

TEST_CASE("threaded count matches sequential") {
  EnumOptions opt;
  opt.threads = 4;
  CHECK(count_states(5, opt) == BigInt(429));
  CHECK(refined_top(5, opt).data == refined_top(5).data);
}

TEST_CASE("ceiling is enforced") {
  EnumOptions opt;
  opt.ceiling = 3;
  CHECK_THROWS_AS(count_states(4, opt), SizeTooLarge);
  CHECK_THROWS_AS((void)enumerate_states(0), OutOfRange);
}

TEST_CASE("brute_z trivial values") {
  SpectralConfig one(0.77, {0.4}, {0.1});
  CHECK(brute_z(one, WeightConvention::signed_w) == doctest::Approx(1.0));

  SpectralConfig two(kEta3, {0.0, 0.0}, {0.0, 0.0});
  CHECK(brute_z(two, WeightConvention::counting) == doctest::Approx(2.0));

  SpectralConfig three(kEta3, {0.0, 0.0, 0.0}, {0.0, 0.0, 0.0});
  CHECK(brute_z(three, WeightConvention::counting) == doctest::Approx(7.0));
}

TEST_CASE("refined top-row statistics at small n") {
  CHECK(refined_top(2).data == std::vector<BigInt>{1, 1});
  CHECK(refined_top(3).data == std::vector<BigInt>{2, 3, 2});
  CHECK(refined_top(4).data == std::vector<BigInt>{7, 14, 14, 7});
}

TEST_CASE("refined table marginals and palindromy") {
  for (int n = 2; n <= 6; ++n) {
    CountTable t = refined_top(n);
    CHECK(t.total() == a_total(n));
    CHECK(t.at(1) == a_total(n - 1));
    for (int r = 1; r <= n; ++r) CHECK(t.at(r) == t.at(n + 1 - r));
  }
}

TEST_CASE("double top-bottom table") {
  CountTable b2 = double_top_bottom(2);
  CHECK(b2.at(1, 2) == BigInt(1));
  CHECK(b2.at(2, 1) == BigInt(1));
  CHECK(b2.at(1, 1) == BigInt(0));
  CHECK(b2.at(2, 2) == BigInt(0));

  CountTable b3 = double_top_bottom(3);
  CHECK(b3.at(1, 1) == BigInt(0));
  CHECK(b3.at(2, 2) == BigInt(1));
  CHECK(b3.at(1, 2) == BigInt(1));
}

TEST_CASE("double table symmetries and marginals") {
  for (int n = 2; n <= 5; ++n) {
    CountTable b = double_top_bottom(n);
    CountTable a = refined_top(n);
    CHECK(b.total() == a_total(n));
    CHECK(b.at(1, 1) == BigInt(0));
    CHECK(b.at(n, n) == BigInt(0));
    for (int r = 1; r <= n; ++r) {
      BigInt row = 0;
      for (int rt = 1; rt <= n; ++rt) {
        row += b.at(r, rt);
        CHECK(b.at(r, rt) == b.at(n + 1 - r, n + 1 - rt));  // half-turn symmetry
      }
      CHECK(row == a.at(r));
    }
  }
}

TEST_CASE("double top-left table") {
  CountTable c2 = double_top_left(2);
  CHECK(c2.corner == BigInt(1));
  CHECK(c2.at(2, 2) == BigInt(1));

  CountTable c3 = double_top_left(3);
  CHECK(c3.corner == BigInt(2));
  CHECK(c3.at(2, 2) == BigInt(2));
  CHECK(c3.at(2, 3) == BigInt(1));
  CHECK(c3.at(3, 2) == BigInt(1));
  CHECK(c3.at(3, 3) == BigInt(1));
}

TEST_CASE("top-left marginals, symmetry, and the corner bijection") {
  for (int n = 2; n <= 6; ++n) {
    CountTable c = double_top_left(n);
    CountTable a = refined_top(n);
    // A(n,1) = C(n;2,2) via the corner bijection.
    CHECK(c.corner == a.at(1));
    CHECK(c.corner == c.at(2, 2));
    for (int r = 2; r <= n; ++r) {
      BigInt row = 0;
      for (int rt = 2; rt <= n; ++rt) {
        row += c.at(r, rt);
        CHECK(c.at(r, rt) == c.at(rt, r));  // transpose symmetry
      }
      CHECK(row == a.at(r));
    }
    CHECK(c.total() + c.corner == a_total(n));
  }
}

TEST_CASE("top-row expansion in counting weights") {
  // With only the top-row parameter nonzero the state sum collapses to
  // sum_r A(n,r) a(u)^(r-1) b(u)^(n-r).
  for (int n = 2; n <= 5; ++n) {
    CountTable a = refined_top(n);
    for (double u : {0.13, 0.41, 0.77, 1.02}) {
      SpectralConfig cfg(kEta3, std::vector<double>(n, 0.0), std::vector<double>(n, 0.0));
      cfg.xs[0] = u;
      const double wa = 2 / std::sqrt(3.0) * std::sin(kPi / 3 + u);
      const double wb = 2 / std::sqrt(3.0) * std::sin(kPi / 3 - u);
      double expect = 0;
      for (int r = 1; r <= n; ++r) {
        expect += a.at(r).to_double() * std::pow(wa, r - 1) * std::pow(wb, n - r);
      }
      CHECK(brute_z(cfg, WeightConvention::counting) ==
            doctest::Approx(expect).epsilon(1e-11));
    }
  }
}
