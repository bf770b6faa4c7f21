#include "sixv/rootuni.hpp"

#include <algorithm>
#include <cmath>

#include "sixv/ikdet.hpp"

namespace sixv {

namespace {

constexpr double kPi = 3.14159265358979323846;
using cplx = std::complex<double>;

// Column norms and right-singular vectors of a complex m x c matrix by
// one-sided Jacobi: pairs of columns are rotated until mutually orthogonal,
// with the same rotations accumulated into V.  Fine for the tiny systems
// here (c <= 2n <= 16) and gives the small singular values to high relative
// accuracy.
struct JacobiSvd {
  std::vector<double> sigma;       // column norms after convergence
  std::vector<std::vector<cplx>> v;  // v[c] = right singular vector c
};

JacobiSvd one_sided_jacobi(std::vector<std::vector<cplx>> a) {
  const size_t cols = a.size();
  JacobiSvd out;
  out.v.assign(cols, std::vector<cplx>(cols, 0.0));
  for (size_t c = 0; c < cols; ++c) out.v[c][c] = 1.0;

  auto dot = [](const std::vector<cplx>& x, const std::vector<cplx>& y) {
    cplx s = 0.0;
    for (size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
    return s;
  };

  const double tol = 1e-15;
  for (int sweep = 0; sweep < 60; ++sweep) {
    bool rotated = false;
    for (size_t p = 0; p < cols; ++p) {
      for (size_t q = p + 1; q < cols; ++q) {
        const double app = std::real(dot(a[p], a[p]));
        const double aqq = std::real(dot(a[q], a[q]));
        const cplx apq = dot(a[p], a[q]);
        const double mag = std::abs(apq);
        if (mag <= tol * std::sqrt(app * aqq) || mag == 0.0) continue;
        rotated = true;
        const cplx phase = apq / mag;
        const double zeta = (aqq - app) / (2.0 * mag);
        const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::fabs(zeta) + std::hypot(1.0, zeta));
        const double cs = 1.0 / std::hypot(1.0, t);
        const double sn = cs * t;
        for (size_t i = 0; i < a[p].size(); ++i) {
          const cplx xp = a[p][i], xq = a[q][i];
          a[p][i] = cs * xp - sn * std::conj(phase) * xq;
          a[q][i] = sn * phase * xp + cs * xq;
        }
        for (size_t i = 0; i < cols; ++i) {
          const cplx vp = out.v[p][i], vq = out.v[q][i];
          out.v[p][i] = cs * vp - sn * std::conj(phase) * vq;
          out.v[q][i] = sn * phase * vp + cs * vq;
        }
      }
    }
    if (!rotated) break;
  }
  out.sigma.resize(cols);
  for (size_t c = 0; c < cols; ++c) {
    out.sigma[c] = std::sqrt(std::real(dot(a[c], a[c])));
  }
  return out;
}

int order_from_us(const std::vector<double>& us) {
  if (us.empty() || us.size() % 2 != 1) {
    throw DimensionMismatch("expected 2n-1 parameters u_1..u_{2n-1}");
  }
  return static_cast<int>(us.size() + 1) / 2;
}

TrigPoly poly_from_allowed(int n, const std::vector<cplx>& allowed_coeffs) {
  const int d = 3 * n - 2;
  TrigPoly f(d, std::vector<cplx>(static_cast<size_t>(d) + 1, 0.0));
  const std::vector<int> freqs = allowed_frequencies(n);
  for (size_t c = 0; c < freqs.size(); ++c) {
    f.set_coeff_at_freq(freqs[c], allowed_coeffs[c]);
  }
  return f;
}

}  // namespace

UPartition u_partition(const SpectralConfig& cfg) {
  UPartition p;
  p.u = cfg.xs[0];
  p.us.reserve(2 * static_cast<size_t>(cfg.n) - 1);
  for (int i = 1; i < cfg.n; ++i) p.us.push_back(cfg.xs[i]);
  for (int j = 0; j < cfg.n; ++j) p.us.push_back(cfg.ys[j]);
  return p;
}

std::vector<int> allowed_frequencies(int n) {
  std::vector<int> freqs;
  for (int k = 1; k <= 3 * n - 1; ++k) {
    if (k % 3 == 0) continue;  // every third coefficient vanishes
    freqs.push_back(3 * n - 2 * k);
  }
  return freqs;
}

// The construction itself runs at any eta (the sampling only needs Z to be a
// trig polynomial); the cyclic and vanishing-coefficient laws it feeds are
// special to eta = 2pi/3, and the negative controls rely on seeing them fail
// elsewhere.
TrigPoly f_from_z(const SpectralConfig& cfg, double guard) {
  const int n = cfg.n;
  const UPartition part = u_partition(cfg);
  const int d = 3 * n - 2;

  // Nodes must stay generic relative to every parameter; walk a fixed
  // deterministic offset schedule until they do.
  for (int attempt = 0; attempt < 64; ++attempt) {
    const double offset = attempt * 0.0437 + (attempt ? 0.0129 : 0.0);
    const std::vector<double> nodes = trig_interpolation_nodes(d, offset);
    bool ok = true;
    for (double node : nodes) {
      for (double ui : part.us) {
        if (std::fabs(std::sin(node - ui)) < guard) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<cplx> samples;
    samples.reserve(nodes.size());
    try {
      for (double node : nodes) {
        SpectralConfig point = cfg;
        point.xs[0] = node;
        long double val = ik_z(point, guard);
        for (double ui : part.us) val *= std::sin(static_cast<long double>(node) - ui);
        samples.push_back(cplx(static_cast<double>(val), 0.0));
      }
    } catch (const DegenerateParameters&) {
      continue;  // a node hit a hidden denominator; shift and retry
    }
    return trig_interpolate(d, offset, samples);
  }
  throw DegenerateParameters("f_from_z: no generic sampling offset found");
}

double cyclic_residual(const TrigPoly& f, int samples) {
  const double shift = 2.0 * kPi / 3.0;
  double max_sum = 0, max_f = 0;
  for (int s = 0; s < samples; ++s) {
    const double u = kPi * (s + 0.31) / samples;
    const cplx total = f.eval(u) + f.eval(u + shift) + f.eval(u + 2 * shift);
    max_sum = std::max(max_sum, std::abs(total));
    max_f = std::max(max_f, std::abs(f.eval(u)));
  }
  if (max_f == 0) return 0;
  return max_sum / max_f;
}

double third_coeff_check(const TrigPoly& f, int n) {
  if (f.maxfreq() != 3 * n - 2) {
    throw DimensionMismatch("third_coeff_check: maxfreq must be 3n-2");
  }
  const double scale = f.max_coeff_mag();
  if (scale == 0) return 0;
  double worst = 0;
  for (int kappa = 1; kappa <= n - 1; ++kappa) {
    // b_{3kappa} multiplies the frequency 3n - 6 kappa.
    worst = std::max(worst, std::abs(f.coeff_at_freq(3 * n - 6 * kappa)));
  }
  return worst / scale;
}

TrigPoly solve_null(const std::vector<double>& us) {
  const int n = order_from_us(us);
  const std::vector<int> freqs = allowed_frequencies(n);
  const size_t cols = freqs.size();  // 2n
  const size_t rows = us.size();     // 2n-1

  std::vector<std::vector<cplx>> a(cols, std::vector<cplx>(rows));
  for (size_t c = 0; c < cols; ++c) {
    for (size_t j = 0; j < rows; ++j) {
      a[c][j] = std::polar(1.0, freqs[c] * us[j]);
    }
  }
  JacobiSvd svd = one_sided_jacobi(std::move(a));

  size_t lo = 0, second = 1;
  if (svd.sigma[second] < svd.sigma[lo]) std::swap(lo, second);
  double sigma_max = 0;
  for (size_t c = 0; c < cols; ++c) {
    sigma_max = std::max(sigma_max, svd.sigma[c]);
    if (c < 2) continue;
    if (svd.sigma[c] < svd.sigma[lo]) {
      second = lo;
      lo = c;
    } else if (svd.sigma[c] < svd.sigma[second]) {
      second = c;
    }
  }
  // Operational meaning of "generic": one singular value collapses (the
  // nullspace direction) and the rest stay well away from it.
  if (svd.sigma[lo] > 1e-6 * sigma_max || svd.sigma[second] < 1e-3 * sigma_max) {
    throw RankDeficient("solve_null: singular values do not isolate a 1-dim nullspace");
  }
  return poly_from_allowed(n, svd.v[lo]).normalized();
}

cplx p_determinant(double u, const std::vector<double>& us) {
  const int n = order_from_us(us);
  const std::vector<int> freqs = allowed_frequencies(n);
  const size_t dim = freqs.size();  // 2n rows and columns

  // Columns: t, t_1, ..., t_{2n-1}; rows: the allowed exponents.
  std::vector<cplx> m(dim * dim);
  for (size_t r = 0; r < dim; ++r) {
    m[r * dim] = std::polar(1.0, freqs[r] * u);
    for (size_t c = 1; c < dim; ++c) {
      m[r * dim + c] = std::polar(1.0, freqs[r] * us[c - 1]);
    }
  }

  // Partial-pivot elimination; entries are unit modulus, so growth beyond
  // ~1e14 can only mean a hopeless condition estimate.
  cplx det = 1.0;
  double growth = 1.0;
  for (size_t k = 0; k < dim; ++k) {
    size_t piv = k;
    double best = 0;
    for (size_t r = k; r < dim; ++r) {
      const double mag = std::abs(m[r * dim + k]);
      if (mag > best) {
        best = mag;
        piv = r;
      }
    }
    if (best == 0.0) return 0.0;
    growth = std::max(growth, best);
    if (growth > 1e14) throw IllConditioned("p_determinant: elimination growth too large");
    if (piv != k) {
      for (size_t c = 0; c < dim; ++c) std::swap(m[piv * dim + c], m[k * dim + c]);
      det = -det;
    }
    const cplx pivot = m[k * dim + k];
    det *= pivot;
    for (size_t r = k + 1; r < dim; ++r) {
      const cplx f = m[r * dim + k] / pivot;
      if (f == cplx(0.0)) continue;
      for (size_t c = k + 1; c < dim; ++c) m[r * dim + c] -= f * m[k * dim + c];
    }
  }
  return det;
}

double union_symmetry_residual(const SpectralConfig& cfg, double guard) {
  const double z0 = ik_z(cfg, guard);
  double worst = 0;
  for (int i = 0; i < cfg.n; ++i) {
    for (int j = 0; j < cfg.n; ++j) {
      SpectralConfig swapped = cfg;
      std::swap(swapped.xs[i], swapped.ys[j]);
      const double z1 = ik_z(swapped, guard);
      worst = std::max(worst, std::fabs(z1 - z0) / std::fabs(z0));
    }
  }
  return worst;
}

}  // namespace sixv
