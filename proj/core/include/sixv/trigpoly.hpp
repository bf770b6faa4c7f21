#pragma once

#include <complex>
#include <vector>

#include "sixv/errors.hpp"

namespace sixv {

// Finite Fourier sum
//
//     f(u) = sum_{k=0}^{d} c_k exp(i (d - 2k) u),
//
// i.e. support on the frequencies d, d-2, ..., -d of a single parity.  The
// quasiperiod follows from the layout: f(u + pi) = (-1)^d f(u).
class TrigPoly {
 public:
  TrigPoly() = default;
  TrigPoly(int maxfreq, std::vector<std::complex<double>> coeffs);

  static TrigPoly constant(std::complex<double> value);

  int maxfreq() const { return maxfreq_; }
  int parity() const { return maxfreq_ % 2 == 0 ? +1 : -1; }
  const std::vector<std::complex<double>>& coeffs() const { return coeffs_; }

  // Coefficient multiplying exp(i*freq*u); zero when freq is off-support.
  std::complex<double> coeff_at_freq(int freq) const;
  void set_coeff_at_freq(int freq, std::complex<double> c);

  std::complex<double> eval(double u) const;
  double max_coeff_mag() const;

  // Scales so the largest-magnitude coefficient becomes exactly +1.  This
  // pins the arbitrary overall constant, so cross-method comparisons reduce
  // to a single complex ratio.
  TrigPoly normalized() const;

  // Frequency-multiplication derivative.
  TrigPoly derivative() const;

 private:
  int maxfreq_ = 0;
  std::vector<std::complex<double>> coeffs_;  // size maxfreq_ + 1
};

// Recovers a TrigPoly of the given maxfreq from point evaluations at the
// d+1 nodes offset + pi*j/(d+1).  Factoring out the top frequency turns the
// fit into a plain discrete Fourier inversion on (phase-rotated) roots of
// unity, which is perfectly conditioned.
TrigPoly trig_interpolate(int maxfreq, double offset,
                          const std::vector<std::complex<double>>& samples);

std::vector<double> trig_interpolation_nodes(int maxfreq, double offset);

}  // namespace sixv
