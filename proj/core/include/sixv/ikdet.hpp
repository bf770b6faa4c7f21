#pragma once

#include <vector>

#include "sixv/model.hpp"

namespace sixv {

// The n x n kernel matrix with entries
//   1 / ( sin(x_i - y_j + eta/2) * sin(x_i - y_j - eta/2) ),
// where x_1 is replaced by x_1 + shift*eta.  Every sine in a denominator is
// guarded: |sin| < guard throws DegenerateParameters naming the pair.
struct IkMatrix {
  int n = 0;
  int shift = 0;
  SpectralConfig source;
  std::vector<double> entries;  // row-major

  double at(int i, int j) const { return entries[static_cast<size_t>(i) * n + j]; }
};

// Default guard threshold: below this scale double-precision determinant
// noise dominates, so the evaluation refuses rather than degrades.
constexpr double kIkGuard = 1e-8;

IkMatrix ik_matrix(const SpectralConfig& cfg, int shift = 0, double guard = kIkGuard);

// Determinant by full-pivoting elimination in extended precision.
double ik_det(const IkMatrix& m);

// Determinant representation of the partition function, normalized so that
// it agrees exactly with brute_z under the signed weight convention:
//
//   Z = prod(s+) prod(s-) (sin eta)^(n - n^2) det M
//       / ( prod_{i<i'} sin(x_i - x_i')  prod_{j<j'} sin(y_j' - y_j) )
//
// with s+- = sin(x_i - y_j +- eta/2).  Requires a generic configuration;
// throws DegenerateParameters otherwise (use enumeration or closed forms for
// coincident parameters).
double ik_z(const SpectralConfig& cfg, double guard = kIkGuard);

// Sum over k = 0..N-1 of det M(x_1 + k*eta, ...), which vanishes when
// eta = 2pi/N.  `residual()` is relative to the largest term.
struct DetSum {
  double sum = 0;
  double max_abs_det = 0;
  double residual() const;
};

DetSum shifted_det_sum(const SpectralConfig& cfg, int N, double guard = kIkGuard);

// Relative residual of the N-term functional equation satisfied by Z at
// eta = 2pi/N.  For N = 3 the three denominator products collapse and the
// handier all-sine form is used.
double basic_equation_residual(const SpectralConfig& cfg, int N, double guard = kIkGuard);

}  // namespace sixv
