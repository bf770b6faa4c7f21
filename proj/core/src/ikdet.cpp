#include "sixv/ikdet.hpp"

#include <cmath>
#include <string>

namespace sixv {

namespace {

// Nonzero reals as mantissa * 2^exp to keep long products of sines away from
// the floating-point range limits; entries can span many orders of magnitude
// when parameters cluster.
struct Scaled {
  long double mant = 1.0L;  // 0, or magnitude in [1, 2) with sign
  long exp = 0;

  void normalize() {
    if (mant == 0.0L) {
      exp = 0;
      return;
    }
    int e;
    mant = std::frexp(mant, &e);  // |mant| in [0.5, 1)
    exp += e;
  }

  void mul(long double f) {
    mant *= f;
    normalize();
  }

  void mul(const Scaled& o) {
    mant *= o.mant;
    exp += o.exp;
    normalize();
  }

  void div(const Scaled& o) {
    mant /= o.mant;
    exp -= o.exp;
    normalize();
  }

  double to_double() const { return static_cast<double>(std::ldexp(mant, static_cast<int>(exp))); }
};

void guard_sine(long double s, double guard, const std::string& what) {
  if (std::fabs(static_cast<double>(s)) < guard) {
    throw DegenerateParameters("|sin(" + what + ")| below guard threshold");
  }
}

std::string pair_name(const char* a, int i, const char* b, int j) {
  return std::string(a) + std::to_string(i + 1) + " - " + b + std::to_string(j + 1);
}

// det of a dense long-double matrix by full-pivot elimination; the pivot
// product is accumulated in scaled form.
Scaled det_full_pivot(std::vector<long double> a, int n) {
  Scaled det;
  int sign = 1;
  auto at = [&](int r, int c) -> long double& { return a[static_cast<size_t>(r) * n + c]; };
  std::vector<int> col(n);
  for (int i = 0; i < n; ++i) col[i] = i;
  for (int k = 0; k < n; ++k) {
    int pr = k, pc = k;
    long double best = 0.0L;
    for (int r = k; r < n; ++r) {
      for (int c = k; c < n; ++c) {
        long double m = std::fabs(at(r, c));
        if (m > best) {
          best = m;
          pr = r;
          pc = c;
        }
      }
    }
    if (best == 0.0L) {
      det.mant = 0.0L;
      det.exp = 0;
      return det;
    }
    if (pr != k) {
      for (int c = 0; c < n; ++c) std::swap(at(pr, c), at(k, c));
      sign = -sign;
    }
    if (pc != k) {
      for (int r = 0; r < n; ++r) std::swap(at(r, pc), at(r, k));
      sign = -sign;
    }
    const long double piv = at(k, k);
    det.mul(piv);
    for (int r = k + 1; r < n; ++r) {
      const long double f = at(r, k) / piv;
      if (f == 0.0L) continue;
      for (int c = k + 1; c < n; ++c) at(r, c) -= f * at(k, c);
    }
  }
  det.mul(static_cast<long double>(sign));
  return det;
}

Scaled det_scaled(const IkMatrix& m) {
  std::vector<long double> a(m.entries.begin(), m.entries.end());
  return det_full_pivot(std::move(a), m.n);
}

}  // namespace

IkMatrix ik_matrix(const SpectralConfig& cfg, int shift, double guard) {
  IkMatrix m;
  m.n = cfg.n;
  m.shift = shift;
  m.source = cfg;
  m.entries.resize(static_cast<size_t>(cfg.n) * cfg.n);
  const double half = cfg.eta / 2.0;
  for (int i = 0; i < cfg.n; ++i) {
    const double xi = cfg.xs[i] + (i == 0 ? shift * cfg.eta : 0.0);
    for (int j = 0; j < cfg.n; ++j) {
      const long double sp = std::sin(static_cast<long double>(xi - cfg.ys[j] + half));
      const long double sm = std::sin(static_cast<long double>(xi - cfg.ys[j] - half));
      guard_sine(sp, guard, pair_name("x", i, "y", j) + " + eta/2");
      guard_sine(sm, guard, pair_name("x", i, "y", j) + " - eta/2");
      m.entries[static_cast<size_t>(i) * cfg.n + j] = static_cast<double>(1.0L / (sp * sm));
    }
  }
  return m;
}

double ik_det(const IkMatrix& m) { return det_scaled(m).to_double(); }

double ik_z(const SpectralConfig& cfg, double guard) {
  const int n = cfg.n;
  const long double eta = cfg.eta;
  const long double s_eta = std::sin(eta);
  guard_sine(s_eta, guard, "eta");

  Scaled num;  // prod s+ * prod s- * (sin eta)^n * det M
  const long double half = eta / 2.0L;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const long double d = static_cast<long double>(cfg.xs[i]) - cfg.ys[j];
      const long double sp = std::sin(d + half);
      const long double sm = std::sin(d - half);
      guard_sine(sp, guard, pair_name("x", i, "y", j) + " + eta/2");
      guard_sine(sm, guard, pair_name("x", i, "y", j) + " - eta/2");
      num.mul(sp);
      num.mul(sm);
    }
  }
  for (int i = 0; i < n; ++i) num.mul(s_eta);
  num.mul(det_scaled(ik_matrix(cfg, 0, guard)));

  Scaled den;  // (sin eta)^(n^2) * both Vandermonde-type products
  for (int i = 0; i < n * n; ++i) den.mul(s_eta);
  for (int i = 0; i < n; ++i) {
    for (int k = i + 1; k < n; ++k) {
      const long double s = std::sin(static_cast<long double>(cfg.xs[i]) - cfg.xs[k]);
      guard_sine(s, guard, pair_name("x", i, "x", k));
      den.mul(s);
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      const long double s = std::sin(static_cast<long double>(cfg.ys[k]) - cfg.ys[j]);
      guard_sine(s, guard, pair_name("y", k, "y", j));
      den.mul(s);
    }
  }
  num.div(den);
  return num.to_double();
}

double DetSum::residual() const {
  if (max_abs_det == 0) return 0;
  return std::fabs(sum) / max_abs_det;
}

DetSum shifted_det_sum(const SpectralConfig& cfg, int N, double guard) {
  if (N < 3) throw OutOfRange("shifted_det_sum: N must be >= 3");
  DetSum r;
  long double sum = 0.0L;
  for (int k = 0; k < N; ++k) {
    const double d = ik_det(ik_matrix(cfg, k, guard));
    sum += d;
    r.max_abs_det = std::max(r.max_abs_det, std::fabs(d));
  }
  r.sum = static_cast<double>(sum);
  return r;
}

double basic_equation_residual(const SpectralConfig& cfg, int N, double guard) {
  if (N < 3) throw OutOfRange("basic_equation_residual: N must be >= 3");
  const int n = cfg.n;
  const double eta = cfg.eta;
  long double sum = 0.0L;
  long double max_term = 0.0L;
  for (int k = 0; k < N; ++k) {
    SpectralConfig shifted = cfg;
    shifted.xs[0] += k * eta;
    long double term = ik_z(shifted, guard);
    for (int i = 1; i < n; ++i) {
      term *= std::sin(static_cast<long double>(cfg.xs[0]) - cfg.xs[i] + k * eta);
    }
    if (N == 3) {
      // Handier all-sine form special to eta = 2pi/3.
      for (int j = 0; j < n; ++j) {
        term *= std::sin(static_cast<long double>(cfg.xs[0]) - cfg.ys[j] + k * eta);
      }
    } else {
      for (int j = 0; j < n; ++j) {
        const long double d = static_cast<long double>(cfg.xs[0]) - cfg.ys[j];
        const long double sp = std::sin(d + (k + 0.5L) * eta);
        const long double sm = std::sin(d + (k - 0.5L) * eta);
        guard_sine(sp, guard, "x1 - y" + std::to_string(j + 1) + " + (k+1/2) eta");
        guard_sine(sm, guard, "x1 - y" + std::to_string(j + 1) + " + (k-1/2) eta");
        term /= sp * sm;
      }
    }
    sum += term;
    max_term = std::max(max_term, std::fabs(term));
  }
  if (max_term == 0.0L) return 0;
  return static_cast<double>(std::fabs(sum) / max_term);
}

}  // namespace sixv
