#pragma once

#include <cstdint>
#include <vector>

#include "sixv/errors.hpp"

namespace sixv {

// Crossing parameter eta and the spectral parameters (all in radians).
// xs[i] rides on lattice row i (row 0 at the top), ys[j] on column j
// (column 0 at the left); a vertex at (i, j) sees the difference xs[i] - ys[j].
struct SpectralConfig {
  int n = 0;
  double eta = 0.0;
  std::vector<double> xs;
  std::vector<double> ys;

  SpectralConfig() = default;
  SpectralConfig(double eta_, std::vector<double> xs_, std::vector<double> ys_);

  // Smallest |sin(u - v)| over distinct positions u, v in xs and ys.
  // Coincidence mod pi is what actually degenerates the determinant formulas,
  // hence the sine rather than a plain difference.
  double separation() const;
  bool generic(double threshold = 1e-8) const { return separation() > threshold; }
};

// The six admissible arrow patterns, grouped by shared weight (letter) with
// the two arrow-reversed variants of each letter numbered 1 and 2.
enum class VertexLetter : uint8_t { a = 0, b = 1, c = 2 };

struct VertexKind {
  VertexLetter letter;
  int variant;  // 1 or 2

  bool operator==(const VertexKind&) const = default;
};

// Two weight conventions are carried side by side:
//   signed_w :  a(d) = sin(d + eta/2)/sin eta,   b(d) = sin(d - eta/2)/sin eta
//   counting :  a(d) = (2/sqrt3) sin(pi/3 + d),  b(d) = (2/sqrt3) sin(pi/3 - d)
// `counting` is only defined at eta = 2pi/3, where it differs from signed_w
// exactly by the sign of b; at the homogeneous point every counting weight
// is 1, making the state sum a bare count of states.
enum class WeightConvention { signed_w, counting };

// Arrow orientations on every edge of an n-by-n lattice with domain-wall
// boundaries: arrows enter on the left/right borders and leave through the
// top/bottom ones.
//
// Indexing (0-based):
//   h(i, j), j in [0, n]: the horizontal edge to the left of vertex (i, j);
//                         h(i, n) is the stub right of the last column.
//                         +1 points rightward.
//   v(i, j), i in [0, n]: the vertical edge above vertex (i, j);
//                         v(n, j) is the stub below the last row.
//                         +1 points upward.
// Vertex (i, j) therefore touches h(i,j), h(i,j+1), v(i,j), v(i+1,j).
class SixVertexState {
 public:
  explicit SixVertexState(int n);

  int n() const { return n_; }
  int h(int i, int j) const { return h_[static_cast<size_t>(i) * (n_ + 1) + j]; }
  int v(int i, int j) const { return v_[static_cast<size_t>(i) * n_ + j]; }
  void set_h(int i, int j, int val) { h_[static_cast<size_t>(i) * (n_ + 1) + j] = static_cast<int8_t>(val); }
  void set_v(int i, int j, int val) { v_[static_cast<size_t>(i) * n_ + j] = static_cast<int8_t>(val); }

  // Checks domain-wall boundaries and the ice rule at every vertex.
  void validate() const;

  bool operator==(const SixVertexState&) const = default;

 private:
  int n_;
  std::vector<int8_t> h_;  // n rows * (n+1) edges
  std::vector<int8_t> v_;  // (n+1) rows * n edges
};

// Square matrix over {-1, 0, +1} whose rows and columns each sum to 1 with
// nonzero entries alternating in sign, starting and ending with +1.
class Asm {
 public:
  explicit Asm(int n) : n_(n), m_(static_cast<size_t>(n) * n, 0) {}

  int n() const { return n_; }
  int at(int i, int j) const { return m_[static_cast<size_t>(i) * n_ + j]; }
  void set(int i, int j, int val) { m_[static_cast<size_t>(i) * n_ + j] = static_cast<int8_t>(val); }

  void validate() const;
  int count_negative() const;

  bool operator==(const Asm&) const = default;

 private:
  int n_;
  std::vector<int8_t> m_;
};

// Weight of a single vertex pattern at spectral difference `delta`.
// Throws DegenerateEta when |sin eta| is below tolerance, InvalidConvention
// when the counting form is requested away from eta = 2pi/3.
double boltzmann_weight(VertexKind kind, double delta, double eta, WeightConvention conv);

// Letter and variant for the arrow pattern (h_left, h_right, v_top, v_bottom),
// each +-1 with the orientation conventions of SixVertexState.  Throws
// IceViolation for the ten non-admissible patterns.
//   a: (+,+,+,+) (-,-,-,-)    b: (+,+,-,-) (-,-,+,+)    c: (+,-,+,-) (-,+,-,+)
VertexKind classify_vertex(int h_left, int h_right, int v_top, int v_bottom);

VertexKind vertex_kind_at(const SixVertexState& s, int i, int j);

// m[i][j] = (h(i,j) - h(i,j+1))/2, which the ice rule makes equal to
// (v(i,j) - v(i+1,j))/2; the domain-wall boundaries telescope the row and
// column sums to 1.
Asm asm_from_state(const SixVertexState& s);

// Inverse of asm_from_state, by partial sums along rows and columns.
SixVertexState state_from_asm(const Asm& a);

// Product over all vertices of the Boltzmann weight at xs[i] - ys[j].
double state_weight(const SixVertexState& s, const SpectralConfig& cfg, WeightConvention conv);

}  // namespace sixv
