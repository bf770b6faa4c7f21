#include "sixv/trigpoly.hpp"

#include <cmath>
#include <string>

namespace sixv {

namespace {
constexpr double kPi = 3.14159265358979323846;
using cplx = std::complex<double>;
}  // namespace

TrigPoly::TrigPoly(int maxfreq, std::vector<cplx> coeffs)
    : maxfreq_(maxfreq), coeffs_(std::move(coeffs)) {
  if (maxfreq_ < 0 || coeffs_.size() != static_cast<size_t>(maxfreq_) + 1) {
    throw DimensionMismatch("TrigPoly: need maxfreq+1 coefficients");
  }
}

TrigPoly TrigPoly::constant(cplx value) { return TrigPoly(0, {value}); }

cplx TrigPoly::coeff_at_freq(int freq) const {
  if (std::abs(freq) > maxfreq_ || (maxfreq_ - freq) % 2 != 0) return 0.0;
  return coeffs_[static_cast<size_t>((maxfreq_ - freq) / 2)];
}

void TrigPoly::set_coeff_at_freq(int freq, cplx c) {
  if (std::abs(freq) > maxfreq_ || (maxfreq_ - freq) % 2 != 0) {
    throw OutOfRange("TrigPoly: frequency " + std::to_string(freq) + " off support");
  }
  coeffs_[static_cast<size_t>((maxfreq_ - freq) / 2)] = c;
}

cplx TrigPoly::eval(double u) const {
  cplx sum = 0.0;
  for (int k = 0; k <= maxfreq_; ++k) {
    const double freq = maxfreq_ - 2 * k;
    sum += coeffs_[static_cast<size_t>(k)] * std::polar(1.0, freq * u);
  }
  return sum;
}

double TrigPoly::max_coeff_mag() const {
  double best = 0;
  for (const cplx& c : coeffs_) best = std::max(best, std::abs(c));
  return best;
}

TrigPoly TrigPoly::normalized() const {
  size_t arg = 0;
  double best = -1;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (std::abs(coeffs_[k]) > best) {
      best = std::abs(coeffs_[k]);
      arg = k;
    }
  }
  if (best <= 0) throw Error("TrigPoly::normalized: zero polynomial");
  std::vector<cplx> out(coeffs_.size());
  const cplx scale = 1.0 / coeffs_[arg];
  for (size_t k = 0; k < coeffs_.size(); ++k) out[k] = coeffs_[k] * scale;
  return TrigPoly(maxfreq_, std::move(out));
}

TrigPoly TrigPoly::derivative() const {
  std::vector<cplx> out(coeffs_.size());
  for (int k = 0; k <= maxfreq_; ++k) {
    const double freq = maxfreq_ - 2 * k;
    out[static_cast<size_t>(k)] = coeffs_[static_cast<size_t>(k)] * cplx(0.0, freq);
  }
  return TrigPoly(maxfreq_, std::move(out));
}

std::vector<double> trig_interpolation_nodes(int maxfreq, double offset) {
  const int m = maxfreq + 1;
  std::vector<double> nodes(m);
  for (int j = 0; j < m; ++j) nodes[j] = offset + kPi * j / m;
  return nodes;
}

TrigPoly trig_interpolate(int maxfreq, double offset, const std::vector<cplx>& samples) {
  const int m = maxfreq + 1;
  if (samples.size() != static_cast<size_t>(m)) {
    throw DimensionMismatch("trig_interpolate: need maxfreq+1 samples");
  }
  // g(z) = f(u) e^{-i d u} is a degree-d polynomial in z = e^{-2iu}; the
  // nodes map z onto the m-th roots of unity rotated by w = e^{-2i*offset}.
  std::vector<cplx> g(m);
  const std::vector<double> nodes = trig_interpolation_nodes(maxfreq, offset);
  for (int j = 0; j < m; ++j) {
    g[j] = samples[static_cast<size_t>(j)] * std::polar(1.0, -double(maxfreq) * nodes[j]);
  }
  std::vector<cplx> coeffs(m);
  const cplx w = std::polar(1.0, -2.0 * offset);
  for (int k = 0; k < m; ++k) {
    cplx sum = 0.0;
    for (int j = 0; j < m; ++j) {
      sum += g[j] * std::polar(1.0, 2.0 * kPi * j * k / m);
    }
    coeffs[static_cast<size_t>(k)] = sum / (double(m) * std::pow(w, k));
  }
  return TrigPoly(maxfreq, std::move(coeffs));
}

}  // namespace sixv
