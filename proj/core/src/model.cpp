#include "sixv/model.hpp"

#include <cmath>
#include <string>

namespace sixv {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kEtaTol = 1e-12;
}  // namespace

SpectralConfig::SpectralConfig(double eta_, std::vector<double> xs_, std::vector<double> ys_)
    : n(static_cast<int>(xs_.size())), eta(eta_), xs(std::move(xs_)), ys(std::move(ys_)) {
  if (xs.empty() || xs.size() != ys.size()) {
    throw DimensionMismatch("SpectralConfig: need equal, nonempty xs and ys");
  }
}

double SpectralConfig::separation() const {
  std::vector<double> all = xs;
  all.insert(all.end(), ys.begin(), ys.end());
  double best = 1.0;
  for (size_t i = 0; i < all.size(); ++i) {
    for (size_t j = i + 1; j < all.size(); ++j) {
      best = std::min(best, std::fabs(std::sin(all[i] - all[j])));
    }
  }
  return best;
}

SixVertexState::SixVertexState(int n)
    : n_(n),
      h_(static_cast<size_t>(n) * (n + 1), 0),
      v_(static_cast<size_t>(n + 1) * n, 0) {
  for (int i = 0; i < n_; ++i) {
    set_h(i, 0, +1);
    set_h(i, n_, -1);
  }
  for (int j = 0; j < n_; ++j) {
    set_v(0, j, +1);
    set_v(n_, j, -1);
  }
}

void SixVertexState::validate() const {
  for (int i = 0; i < n_; ++i) {
    if (h(i, 0) != +1 || h(i, n_) != -1) {
      throw IceViolation("state: domain-wall horizontal boundary broken in row " +
                         std::to_string(i));
    }
  }
  for (int j = 0; j < n_; ++j) {
    if (v(0, j) != +1 || v(n_, j) != -1) {
      throw IceViolation("state: domain-wall vertical boundary broken in column " +
                         std::to_string(j));
    }
  }
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      classify_vertex(h(i, j), h(i, j + 1), v(i, j), v(i + 1, j));
    }
  }
}

void Asm::validate() const {
  for (int i = 0; i < n_; ++i) {
    int sum = 0, last = 0;
    for (int j = 0; j < n_; ++j) {
      int e = at(i, j);
      if (e < -1 || e > 1) throw Error("asm: entry out of {-1,0,1}");
      sum += e;
      if (e != 0) {
        if (last == e) throw Error("asm: row signs do not alternate");
        last = e;
      }
    }
    if (sum != 1 || last != 1) throw Error("asm: bad row " + std::to_string(i));
  }
  for (int j = 0; j < n_; ++j) {
    int sum = 0, last = 0;
    for (int i = 0; i < n_; ++i) {
      int e = at(i, j);
      sum += e;
      if (e != 0) {
        if (last == e) throw Error("asm: column signs do not alternate");
        last = e;
      }
    }
    if (sum != 1 || last != 1) throw Error("asm: bad column " + std::to_string(j));
  }
}

int Asm::count_negative() const {
  int c = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (at(i, j) < 0) ++c;
    }
  }
  return c;
}

double boltzmann_weight(VertexKind kind, double delta, double eta, WeightConvention conv) {
  if (conv == WeightConvention::counting && std::fabs(eta - 2.0 * kPi / 3.0) > kEtaTol) {
    throw InvalidConvention("counting weights require eta = 2pi/3");
  }
  switch (kind.letter) {
    case VertexLetter::c:
      return 1.0;
    case VertexLetter::a:
      if (conv == WeightConvention::counting) {
        return 2.0 / std::sqrt(3.0) * std::sin(kPi / 3.0 + delta);
      }
      break;
    case VertexLetter::b:
      if (conv == WeightConvention::counting) {
        return 2.0 / std::sqrt(3.0) * std::sin(kPi / 3.0 - delta);
      }
      break;
  }
  double s = std::sin(eta);
  if (std::fabs(s) < kEtaTol) {
    throw DegenerateEta("boltzmann_weight: |sin eta| below tolerance");
  }
  double half = eta / 2.0;
  return kind.letter == VertexLetter::a ? std::sin(delta + half) / s : std::sin(delta - half) / s;
}

VertexKind classify_vertex(int h_left, int h_right, int v_top, int v_bottom) {
  const int idx = (h_left > 0 ? 8 : 0) | (h_right > 0 ? 4 : 0) | (v_top > 0 ? 2 : 0) |
                  (v_bottom > 0 ? 1 : 0);
  switch (idx) {
    case 0b1111: return {VertexLetter::a, 1};
    case 0b0000: return {VertexLetter::a, 2};
    case 0b1100: return {VertexLetter::b, 1};
    case 0b0011: return {VertexLetter::b, 2};
    case 0b1010: return {VertexLetter::c, 1};
    case 0b0101: return {VertexLetter::c, 2};
    default:
      throw IceViolation("classify_vertex: pattern " + std::to_string(idx) +
                         " breaks the two-in-two-out rule");
  }
}

VertexKind vertex_kind_at(const SixVertexState& s, int i, int j) {
  return classify_vertex(s.h(i, j), s.h(i, j + 1), s.v(i, j), s.v(i + 1, j));
}

Asm asm_from_state(const SixVertexState& s) {
  const int n = s.n();
  Asm a(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int mh = (s.h(i, j) - s.h(i, j + 1)) / 2;
      int mv = (s.v(i, j) - s.v(i + 1, j)) / 2;
      if (mh != mv) {
        throw IceViolation("asm_from_state: row and column increments disagree at (" +
                           std::to_string(i) + "," + std::to_string(j) + ")");
      }
      a.set(i, j, mh);
    }
  }
  return a;
}

SixVertexState state_from_asm(const Asm& a) {
  const int n = a.n();
  SixVertexState s(n);
  for (int i = 0; i < n; ++i) {
    int h = +1;
    for (int j = 0; j < n; ++j) {
      h -= 2 * a.at(i, j);
      s.set_h(i, j + 1, h);
    }
  }
  for (int j = 0; j < n; ++j) {
    int v = +1;
    for (int i = 0; i < n; ++i) {
      v -= 2 * a.at(i, j);
      s.set_v(i + 1, j, v);
    }
  }
  s.validate();
  return s;
}

double state_weight(const SixVertexState& s, const SpectralConfig& cfg, WeightConvention conv) {
  if (s.n() != cfg.n) throw DimensionMismatch("state_weight: state and config sizes differ");
  long double w = 1.0L;
  for (int i = 0; i < s.n(); ++i) {
    for (int j = 0; j < s.n(); ++j) {
      w *= boltzmann_weight(vertex_kind_at(s, i, j), cfg.xs[i] - cfg.ys[j], cfg.eta, conv);
    }
  }
  return static_cast<double>(w);
}

}  // namespace sixv
