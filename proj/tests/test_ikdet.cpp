#include <cmath>
#include <random>

#include "doctest.h"
#include "sixv/enumerate.hpp"
#include "sixv/ikdet.hpp"

using namespace sixv;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEta3 = 2.0 * kPi / 3.0;

// Test-local generic sampler; rejections keep every guarded sine >= 0.02.
SpectralConfig draw(std::mt19937_64& rng, int n, double eta) {
  auto uni = [&] { return (rng() >> 11) * 0x1.0p-53 * (kPi / 2); };
  for (;;) {
    std::vector<double> xs(n), ys(n);
    for (double& x : xs) x = uni();
    for (double& y : ys) y = uni();
    SpectralConfig cfg(eta, xs, ys);
    if (cfg.separation() < 0.02) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = 0; j < n; ++j) {
        const double d = cfg.xs[i] - cfg.ys[j];
        if (std::fabs(std::sin(d + eta / 2)) < 0.02 || std::fabs(std::sin(d - eta / 2)) < 0.02) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return cfg;
  }
}

}  // namespace

TEST_CASE("n=1 determinant value is exactly 1") {
  SpectralConfig cfg(kEta3, {0.4}, {0.1});
  CHECK(ik_z(cfg) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("determinant equals brute force for n = 2..5 across eta") {
  std::mt19937_64 rng(2024);
  for (double eta : {kEta3, 0.9, 1.7}) {
    for (int n = 2; n <= 5; ++n) {
      for (int t = 0; t < 5; ++t) {
        SpectralConfig cfg = draw(rng, n, eta);
        const double zb = brute_z(cfg, WeightConvention::signed_w);
        const double zi = ik_z(cfg);
        CHECK(std::fabs(zi - zb) / std::fabs(zb) < 1e-9);
      }
    }
  }
}

TEST_CASE("Z is symmetric under permutations of xs and of ys") {
  std::mt19937_64 rng(5);
  SpectralConfig cfg = draw(rng, 3, kEta3);
  const double z0 = ik_z(cfg);
  SpectralConfig px = cfg;
  std::swap(px.xs[0], px.xs[2]);
  SpectralConfig py = cfg;
  std::swap(py.ys[1], py.ys[2]);
  CHECK(std::fabs(ik_z(px) - z0) / std::fabs(z0) < 1e-10);
  CHECK(std::fabs(ik_z(py) - z0) / std::fabs(z0) < 1e-10);
}

TEST_CASE("quasiperiodicity: shifting one parameter by pi flips by (-1)^(n-1)") {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 4; ++n) {
    SpectralConfig cfg = draw(rng, n, 1.1);
    const double z0 = ik_z(cfg);
    SpectralConfig sx = cfg;
    sx.xs[n - 1] += kPi;
    SpectralConfig sy = cfg;
    sy.ys[0] += kPi;
    const double sign = n % 2 ? 1.0 : -1.0;
    CHECK(ik_z(sx) / z0 == doctest::Approx(sign).epsilon(1e-9));
    CHECK(ik_z(sy) / z0 == doctest::Approx(sign).epsilon(1e-9));
  }
}

TEST_CASE("invariance under x -> pi/2 - x, y -> -y, eta -> pi - eta") {
  std::mt19937_64 rng(17);
  for (int n = 2; n <= 4; ++n) {
    SpectralConfig cfg = draw(rng, n, 0.9);
    SpectralConfig t = cfg;
    t.eta = kPi - cfg.eta;
    for (double& x : t.xs) x = kPi / 2 - x;
    for (double& y : t.ys) y = -y;
    CHECK(ik_z(t) == doctest::Approx(ik_z(cfg)).epsilon(1e-9));
  }
}

TEST_CASE("degenerate parameters are refused with the pair named") {
  SpectralConfig cfg(kEta3, {0.3, 0.3}, {0.1, 0.8});
  CHECK_THROWS_WITH_AS(ik_z(cfg), doctest::Contains("x1 - x2"), DegenerateParameters);
  // coincidence mod pi counts too
  SpectralConfig cfg2(kEta3, {0.3, 0.3 + kPi}, {0.1, 0.8});
  CHECK_THROWS_AS(ik_z(cfg2), DegenerateParameters);
  // a matrix denominator hitting a zero of sin
  SpectralConfig cfg3(kEta3, {0.1 + kPi / 3, 0.5}, {0.1, 0.9});
  CHECK_THROWS_AS(ik_z(cfg3), DegenerateParameters);
}

TEST_CASE("shifted determinant sum vanishes at eta = 2pi/N") {
  std::mt19937_64 rng(23);
  SUBCASE("n=2, N=3") {
    SpectralConfig cfg = draw(rng, 2, 2 * kPi / 3);
    CHECK(shifted_det_sum(cfg, 3).residual() < 1e-10);
  }
  SUBCASE("n=3, N=4 and N=5") {
    SpectralConfig c4 = draw(rng, 3, 2 * kPi / 4);
    CHECK(shifted_det_sum(c4, 4).residual() < 1e-10);
    SpectralConfig c5 = draw(rng, 3, 2 * kPi / 5);
    CHECK(shifted_det_sum(c5, 5).residual() < 1e-10);
  }
  SUBCASE("negative control: eta not a root of unity") {
    SpectralConfig cfg = draw(rng, 2, 1.0);
    CHECK(shifted_det_sum(cfg, 3).residual() > 1e-3);
  }
}

TEST_CASE("the N-term functional equation for Z") {
  std::mt19937_64 rng(31);
  SUBCASE("product form at N=3") {
    for (int n : {2, 3}) {
      SpectralConfig cfg = draw(rng, n, 2 * kPi / 3);
      CHECK(basic_equation_residual(cfg, 3) < 1e-9);
    }
  }
  SUBCASE("general form at N=4") {
    SpectralConfig cfg = draw(rng, 2, 2 * kPi / 4);
    CHECK(basic_equation_residual(cfg, 4) < 1e-10);
  }
}

TEST_CASE("kernel matrix entries and the shift of x1") {
  SpectralConfig cfg(kEta3, {0.4, 0.9}, {0.1, 0.65});
  IkMatrix m = ik_matrix(cfg, 0);
  const double d = 0.4 - 0.65;
  CHECK(m.at(0, 1) ==
        doctest::Approx(1.0 / (std::sin(d + kEta3 / 2) * std::sin(d - kEta3 / 2))));
  IkMatrix shifted = ik_matrix(cfg, 2);
  const double ds = 0.4 + 2 * kEta3 - 0.1;
  CHECK(shifted.at(0, 0) ==
        doctest::Approx(1.0 / (std::sin(ds + kEta3 / 2) * std::sin(ds - kEta3 / 2))));
  // rows below the first are untouched by the shift
  CHECK(shifted.at(1, 0) == m.at(1, 0));
  CHECK(shifted.at(1, 1) == m.at(1, 1));
}
