#pragma once

#include <complex>
#include <vector>

#include "sixv/model.hpp"
#include "sixv/trigpoly.hpp"

namespace sixv {

// The eta = 2pi/3 machinery: with u = x_1 distinguished, the combination
// f(u) = Z(u) * prod_i sin(u - u_i) over the remaining 2n-1 parameters is a
// trigonometric polynomial killed by the three-term cyclic sum, its every
// third Fourier coefficient vanishes, and it is recoverable from the zeros
// u_i alone (up to one constant) by a nullspace solve or by an explicit
// alternant determinant.

// x_1 split off from the remaining parameters x_2..x_n, y_1..y_n.
struct UPartition {
  double u = 0;
  std::vector<double> us;  // size 2n-1
};

UPartition u_partition(const SpectralConfig& cfg);

// The 2n frequencies 3n-2, 3n-4, ... with multiples of 3 removed, descending.
std::vector<int> allowed_frequencies(int n);

// Builds f(u) = Z(u) prod sin(u - u_i) by sampling Z (through the
// determinant representation) at 3n-1 nodes and inverting the Fourier
// system.  The node offset is retried deterministically if a node collides
// with a parameter.  Result: maxfreq 3n-2, parity (-1)^n.
TrigPoly f_from_z(const SpectralConfig& cfg, double guard = 1e-8);

// max_u |f(u) + f(u + 2pi/3) + f(u + 4pi/3)| / max|f|, sampled.
double cyclic_residual(const TrigPoly& f, int samples = 64);

// Largest magnitude among the coefficients at frequencies = 0 mod 3 (the
// b_{3k} of a maxfreq 3n-2 polynomial), relative to the largest coefficient.
double third_coeff_check(const TrigPoly& f, int n);

// Solves the homogeneous interpolation system f(u_j) = 0 over the allowed
// frequencies: the nullspace is one-dimensional for generic u_j.  Returned
// normalized (largest coefficient +1).  Throws RankDeficient when the
// singular-value profile does not show exactly one vanishing direction.
TrigPoly solve_null(const std::vector<double>& us);

// Alternant determinant in t = exp(iu), t_j = exp(iu_j) whose rows run over
// the allowed frequencies; vanishes at u = u_j and spans the same nullspace
// as solve_null.
std::complex<double> p_determinant(double u, const std::vector<double>& us);

// max over all single x_i <-> y_j transpositions of the relative change of
// the determinant Z; tiny exactly at eta = 2pi/3.
double union_symmetry_residual(const SpectralConfig& cfg, double guard = 1e-8);

}  // namespace sixv
