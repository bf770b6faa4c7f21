#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "sixv/ikdet.hpp"
#include "sixv/rootuni.hpp"

using namespace sixv;
using cplx = std::complex<double>;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEta3 = 2.0 * kPi / 3.0;

SpectralConfig draw(std::mt19937_64& rng, int n, double eta) {
  auto uni = [&] { return (rng() >> 11) * 0x1.0p-53 * (kPi / 2); };
  for (;;) {
    std::vector<double> xs(n), ys(n);
    for (double& x : xs) x = uni();
    for (double& y : ys) y = uni();
    SpectralConfig cfg(eta, xs, ys);
    if (cfg.separation() < 0.03) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = 0; j < n; ++j) {
        const double d = cfg.xs[i] - cfg.ys[j];
        if (std::fabs(std::sin(d + eta / 2)) < 0.03 || std::fabs(std::sin(d - eta / 2)) < 0.03) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return cfg;
  }
}

double direct_f(const SpectralConfig& cfg, double u) {
  SpectralConfig p = cfg;
  p.xs[0] = u;
  double val = ik_z(p);
  for (double ui : u_partition(cfg).us) val *= std::sin(u - ui);
  return val;
}

}  // namespace

TEST_CASE("allowed frequencies skip multiples of three") {
  CHECK(allowed_frequencies(1) == std::vector<int>{1, -1});
  CHECK(allowed_frequencies(2) == std::vector<int>{4, 2, -2, -4});
  CHECK(allowed_frequencies(3) == std::vector<int>{7, 5, 1, -1, -5, -7});
  for (int n = 1; n <= 6; ++n) {
    auto f = allowed_frequencies(n);
    CHECK(f.size() == 2 * static_cast<size_t>(n));
    for (int v : f) CHECK(v % 3 != 0);
  }
}

TEST_CASE("f_from_z at n=1 is proportional to sin(u - y1)") {
  SpectralConfig cfg(kEta3, {0.4}, {0.9});
  TrigPoly f = f_from_z(cfg);
  CHECK(f.maxfreq() == 1);
  for (double u : {0.2, 0.8, 1.9}) {
    CHECK(std::abs(f.eval(u).real() - std::sin(u - 0.9)) < 1e-12);
    CHECK(std::abs(f.eval(u).imag()) < 1e-12);
  }
}

TEST_CASE("f_from_z interpolates the direct product, n = 2, 3") {
  std::mt19937_64 rng(71);
  for (int n : {2, 3}) {
    SpectralConfig cfg = draw(rng, n, kEta3);
    TrigPoly f = f_from_z(cfg);
    CHECK(f.maxfreq() == 3 * n - 2);
    CHECK(f.parity() == (n % 2 ? -1 : 1));
    double scale = 0;
    for (int s = 0; s < 10; ++s) scale = std::max(scale, std::fabs(direct_f(cfg, 0.3 + 0.29 * s)));
    for (int s = 0; s < 10; ++s) {
      const double u = 0.3 + 0.29 * s;
      CHECK(std::abs(f.eval(u) - direct_f(cfg, u)) < 1e-9 * scale);
    }
  }
}

TEST_CASE("cyclic three-term sum vanishes for f built from Z") {
  std::mt19937_64 rng(73);
  SpectralConfig c1 = draw(rng, 1, kEta3);
  CHECK(cyclic_residual(f_from_z(c1)) < 1e-12);
  SpectralConfig c3 = draw(rng, 3, kEta3);
  CHECK(cyclic_residual(f_from_z(c3)) < 1e-9);
}

TEST_CASE("the constant polynomial fails the cyclic law, residual 3") {
  CHECK(cyclic_residual(TrigPoly::constant(1.0)) == doctest::Approx(3.0));
}

TEST_CASE("every third coefficient vanishes at eta = 2pi/3 and only there") {
  std::mt19937_64 rng(77);
  SpectralConfig c2 = draw(rng, 2, kEta3);
  CHECK(third_coeff_check(f_from_z(c2), 2) < 1e-10);
  SpectralConfig c3 = draw(rng, 3, kEta3);
  CHECK(third_coeff_check(f_from_z(c3), 3) < 1e-9);
  // negative control away from the root of unity
  SpectralConfig bad = draw(rng, 2, 0.9);
  CHECK(third_coeff_check(f_from_z(bad), 2) > 1e-3);
}

TEST_CASE("solve_null at n=1 gives sin(u - 0.7)") {
  TrigPoly f = solve_null({0.7});
  for (double u : {0.1, 1.4}) {
    const cplx ratio = f.eval(u) / cplx(std::sin(u - 0.7), 0.0);
    const cplx ratio0 = f.eval(2.0) / cplx(std::sin(2.0 - 0.7), 0.0);
    CHECK(std::abs(ratio - ratio0) < 1e-12 * std::abs(ratio0));
  }
  CHECK(std::abs(f.eval(0.7)) < 1e-14);
}

TEST_CASE("solve_null vanishes at the nodes and obeys the cyclic law") {
  std::mt19937_64 rng(83);
  for (int n : {2, 3}) {
    SpectralConfig cfg = draw(rng, n, kEta3);
    const std::vector<double> us = u_partition(cfg).us;
    TrigPoly f = solve_null(us);
    double scale = 0;
    for (int s = 0; s < 24; ++s) scale = std::max(scale, std::abs(f.eval(kPi * s / 24.0 + 0.05)));
    for (double uj : us) CHECK(std::abs(f.eval(uj)) < 1e-9 * scale);
    CHECK(cyclic_residual(f) < 1e-9);
    CHECK(third_coeff_check(f, n) == 0.0);  // structural zeros
  }
}

TEST_CASE("solve_null matches f_from_z up to a u-independent constant") {
  std::mt19937_64 rng(89);
  for (int n : {2, 3}) {
    SpectralConfig cfg = draw(rng, n, kEta3);
    TrigPoly f1 = f_from_z(cfg);
    TrigPoly f2 = solve_null(u_partition(cfg).us);
    cplx ratio0 = 0.0;
    for (int s = 0; s < 12; ++s) {
      const double u = 0.217 + 0.511 * s;
      const cplx den = f2.eval(u);
      if (std::abs(den) < 1e-3) continue;
      const cplx r = f1.eval(u) / den;
      if (ratio0 == cplx(0.0)) {
        ratio0 = r;
      } else {
        CHECK(std::abs(r - ratio0) < 1e-8 * std::abs(ratio0));
      }
    }
  }
}

TEST_CASE("solve_null refuses coincident nodes") {
  CHECK_THROWS_AS(solve_null(std::vector<double>{0.4, 0.4, 0.9}), RankDeficient);
}

TEST_CASE("the alternant determinant at n=1 is proportional to sin(u - a)") {
  const double alpha = 0.6;
  const cplx p1 = p_determinant(1.1, {alpha});
  const cplx p2 = p_determinant(2.0, {alpha});
  CHECK(std::abs(p1 / cplx(std::sin(1.1 - alpha)) - p2 / cplx(std::sin(2.0 - alpha))) <
        1e-12 * std::abs(p1));
  CHECK(std::abs(p_determinant(alpha, {alpha})) < 1e-14);
}

TEST_CASE("the alternant vanishes at the nodes and spans the same line as solve_null") {
  std::mt19937_64 rng(97);
  for (int n : {2, 3}) {
    SpectralConfig cfg = draw(rng, n, kEta3);
    const std::vector<double> us = u_partition(cfg).us;
    double scale = 0;
    for (int s = 0; s < 10; ++s) {
      scale = std::max(scale, std::abs(p_determinant(0.217 + 0.511 * s, us)));
    }
    for (double uj : us) CHECK(std::abs(p_determinant(uj, us)) < 1e-9 * scale);

    TrigPoly f = solve_null(us);
    cplx ratio0 = 0.0;
    for (int s = 0; s < 10; ++s) {
      const double u = 0.217 + 0.511 * s;
      const cplx den = f.eval(u);
      if (std::abs(den) < 1e-3) continue;
      const cplx r = p_determinant(u, us) / den;
      if (ratio0 == cplx(0.0)) {
        ratio0 = r;
      } else {
        CHECK(std::abs(r - ratio0) < 1e-8 * std::abs(ratio0));
      }
    }
  }
}

TEST_CASE("union symmetry holds at eta = 2pi/3 and fails away from it") {
  std::mt19937_64 rng(101);
  SpectralConfig c2 = draw(rng, 2, kEta3);
  CHECK(union_symmetry_residual(c2) < 1e-9);
  SpectralConfig c3 = draw(rng, 3, kEta3);
  CHECK(union_symmetry_residual(c3) < 1e-9);
  SpectralConfig bad = draw(rng, 2, 0.9);
  CHECK(union_symmetry_residual(bad) > 1e-3);
}

TEST_CASE("third_coeff_check rejects a polynomial of the wrong degree") {
  CHECK_THROWS_AS(third_coeff_check(TrigPoly::constant(1.0), 2), DimensionMismatch);
}
