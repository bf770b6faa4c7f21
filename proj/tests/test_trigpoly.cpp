#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "sixv/trigpoly.hpp"

using namespace sixv;
using cplx = std::complex<double>;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("coefficient layout and evaluation") {
  // f(u) = e^{3iu} + 2 e^{-iu}
  TrigPoly f(3, {cplx(1, 0), cplx(0, 0), cplx(2, 0), cplx(0, 0)});
  CHECK(f.parity() == -1);
  CHECK(f.coeff_at_freq(3) == cplx(1, 0));
  CHECK(f.coeff_at_freq(-1) == cplx(2, 0));
  CHECK(f.coeff_at_freq(2) == cplx(0, 0));  // off parity
  const double u = 0.73;
  const cplx expect = std::polar(1.0, 3 * u) + 2.0 * std::polar(1.0, -u);
  CHECK(std::abs(f.eval(u) - expect) < 1e-14);
}

TEST_CASE("quasiperiod sign matches the parity of maxfreq") {
  std::mt19937_64 rng(3);
  auto coef = [&] { return cplx((rng() % 1000) / 500.0 - 1.0, (rng() % 1000) / 500.0 - 1.0); };
  for (int d : {1, 2, 5, 8}) {
    std::vector<cplx> cs(d + 1);
    for (auto& c : cs) c = coef();
    TrigPoly f(d, cs);
    for (double u : {0.1, 0.9, 2.3}) {
      const cplx lhs = f.eval(u + kPi);
      const cplx rhs = static_cast<double>(f.parity()) * f.eval(u);
      CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(rhs)));
    }
  }
}

TEST_CASE("interpolation recovers the coefficients exactly") {
  std::mt19937_64 rng(9);
  auto coef = [&] { return cplx((rng() % 1000) / 500.0 - 1.0, (rng() % 1000) / 500.0 - 1.0); };
  for (int d : {1, 4, 7}) {
    std::vector<cplx> cs(d + 1);
    for (auto& c : cs) c = coef();
    TrigPoly f(d, cs);
    const double offset = 0.217;
    std::vector<cplx> samples;
    for (double node : trig_interpolation_nodes(d, offset)) samples.push_back(f.eval(node));
    TrigPoly g = trig_interpolate(d, offset, samples);
    for (int k = 0; k <= d; ++k) {
      CHECK(std::abs(g.coeffs()[k] - cs[k]) < 1e-12);
    }
  }
}

TEST_CASE("normalization pins the largest coefficient to +1") {
  TrigPoly f(2, {cplx(0, 0.5), cplx(-3, 4), cplx(1, 0)});
  TrigPoly g = f.normalized();
  CHECK(std::abs(g.coeffs()[1] - cplx(1, 0)) < 1e-15);
  CHECK(std::abs(g.coeffs()[0] / g.coeffs()[2] - f.coeffs()[0] / f.coeffs()[2]) < 1e-14);
}

TEST_CASE("derivative multiplies by i times the frequency") {
  TrigPoly f(2, {cplx(1, 0), cplx(5, 0), cplx(2, 0)});
  TrigPoly df = f.derivative();
  const double u = 0.37, h = 1e-6;
  const cplx numeric = (f.eval(u + h) - f.eval(u - h)) / (2 * h);
  CHECK(std::abs(df.eval(u) - numeric) < 1e-8);
}
