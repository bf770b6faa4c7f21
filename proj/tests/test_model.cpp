#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"
#include "sixv/enumerate.hpp"
#include "sixv/model.hpp"

using namespace sixv;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kEta3 = 2.0 * kPi / 3.0;
}  // namespace

TEST_CASE("boltzmann weights at reference points") {
  CHECK(boltzmann_weight({VertexLetter::a, 1}, 0.0, kEta3, WeightConvention::signed_w) ==
        doctest::Approx(1.0));
  CHECK(boltzmann_weight({VertexLetter::b, 1}, 0.0, kEta3, WeightConvention::signed_w) ==
        doctest::Approx(-1.0));
  CHECK(boltzmann_weight({VertexLetter::b, 2}, 0.0, kEta3, WeightConvention::counting) ==
        doctest::Approx(1.0));
  CHECK(boltzmann_weight({VertexLetter::c, 1}, 0.37, 1.1, WeightConvention::signed_w) == 1.0);
  // counting agrees with signed on a and flips the sign of b at eta = 2pi/3
  for (double d : {0.1, 0.7, -0.4}) {
    CHECK(boltzmann_weight({VertexLetter::a, 1}, d, kEta3, WeightConvention::counting) ==
          doctest::Approx(boltzmann_weight({VertexLetter::a, 1}, d, kEta3,
                                           WeightConvention::signed_w)));
    CHECK(boltzmann_weight({VertexLetter::b, 1}, d, kEta3, WeightConvention::counting) ==
          doctest::Approx(-boltzmann_weight({VertexLetter::b, 1}, d, kEta3,
                                            WeightConvention::signed_w)));
  }
}

TEST_CASE("boltzmann weight error paths") {
  CHECK_THROWS_AS(boltzmann_weight({VertexLetter::a, 1}, 0.1, 0.0, WeightConvention::signed_w),
                  DegenerateEta);
  CHECK_THROWS_AS(boltzmann_weight({VertexLetter::a, 1}, 0.1, kPi, WeightConvention::signed_w),
                  DegenerateEta);
  CHECK_THROWS_AS(boltzmann_weight({VertexLetter::b, 1}, 0.1, 0.9, WeightConvention::counting),
                  InvalidConvention);
}

TEST_CASE("vertex classification covers exactly the six ice patterns") {
  CHECK(classify_vertex(+1, +1, +1, +1) == VertexKind{VertexLetter::a, 1});
  CHECK(classify_vertex(-1, -1, -1, -1) == VertexKind{VertexLetter::a, 2});
  CHECK(classify_vertex(+1, +1, -1, -1) == VertexKind{VertexLetter::b, 1});
  CHECK(classify_vertex(-1, -1, +1, +1) == VertexKind{VertexLetter::b, 2});
  CHECK(classify_vertex(+1, -1, +1, -1) == VertexKind{VertexLetter::c, 1});
  CHECK(classify_vertex(-1, +1, -1, +1) == VertexKind{VertexLetter::c, 2});
  CHECK_THROWS_AS(classify_vertex(+1, -1, -1, +1), IceViolation);  // four arrows in
  int valid = 0;
  for (int mask = 0; mask < 16; ++mask) {
    try {
      classify_vertex(mask & 8 ? 1 : -1, mask & 4 ? 1 : -1, mask & 2 ? 1 : -1, mask & 1 ? 1 : -1);
      ++valid;
    } catch (const IceViolation&) {
    }
  }
  CHECK(valid == 6);
}

TEST_CASE("n=1 has the single c-vertex state mapping to [[1]]") {
  auto states = enumerate_states(1);
  REQUIRE(states.size() == 1);
  states[0].validate();
  CHECK(vertex_kind_at(states[0], 0, 0).letter == VertexLetter::c);
  Asm a = asm_from_state(states[0]);
  CHECK(a.at(0, 0) == 1);
  SpectralConfig cfg(1.234, {0.3}, {0.8});
  CHECK(state_weight(states[0], cfg, WeightConvention::signed_w) == doctest::Approx(1.0));
}

TEST_CASE("n=2 state with c-vertices on the diagonal is the identity matrix") {
  for (const auto& st : enumerate_states(2)) {
    if (vertex_kind_at(st, 0, 0).letter == VertexLetter::c &&
        vertex_kind_at(st, 1, 1).letter == VertexLetter::c) {
      Asm a = asm_from_state(st);
      CHECK(a.at(0, 0) == 1);
      CHECK(a.at(1, 1) == 1);
      CHECK(a.at(0, 1) == 0);
      CHECK(a.at(1, 0) == 0);
      return;
    }
  }
  FAIL("diagonal state not found");
}

TEST_CASE("asm round trip and validity over all states, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    std::set<std::vector<int>> seen;
    for_each_state(n, [&](const SixVertexState& st) {
      st.validate();
      Asm a = asm_from_state(st);
      a.validate();
      CHECK(state_from_asm(a) == st);
      std::vector<int> key;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) key.push_back(a.at(i, j));
      }
      CHECK(seen.insert(key).second);  // no duplicates
    });
  }
}

TEST_CASE("c-vertex count is n plus twice the number of -1 entries") {
  for (int n = 1; n <= 4; ++n) {
    for_each_state(n, [&](const SixVertexState& st) {
      int c = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (vertex_kind_at(st, i, j).letter == VertexLetter::c) ++c;
        }
      }
      CHECK(c == n + 2 * asm_from_state(st).count_negative());
    });
  }
}

TEST_CASE("counting and signed weights differ by the parity of b-vertices") {
  SpectralConfig cfg(kEta3, {0.31, 0.17, 0.52}, {0.05, 0.71, 0.44});
  for_each_state(3, [&](const SixVertexState& st) {
    int b = 0;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (vertex_kind_at(st, i, j).letter == VertexLetter::b) ++b;
      }
    }
    const double ws = state_weight(st, cfg, WeightConvention::signed_w);
    const double wc = state_weight(st, cfg, WeightConvention::counting);
    CHECK(wc == doctest::Approx(ws * (b % 2 ? -1 : 1)).epsilon(1e-12));
  });
}

TEST_CASE("homogeneous n=2 weights per state") {
  // Both order-2 states carry two c-vertices plus either two a's or two b's,
  // so every weight is +1 in both conventions at the homogeneous point.
  SpectralConfig cfg(kEta3, {0.0, 0.0}, {0.0, 0.0});
  for (const auto& st : enumerate_states(2)) {
    CHECK(state_weight(st, cfg, WeightConvention::counting) == doctest::Approx(1.0));
    CHECK(state_weight(st, cfg, WeightConvention::signed_w) == doctest::Approx(1.0));
  }
}

TEST_CASE("state_from_asm rejects a non-alternating matrix") {
  Asm bad(2);
  bad.set(0, 0, 1);
  bad.set(1, 1, 1);
  bad.set(0, 1, 1);  // row sums to 2
  CHECK_THROWS(state_from_asm(bad));
}

TEST_CASE("row and column telescoping agree at every vertex") {
  for_each_state(4, [&](const SixVertexState& st) {
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        CHECK(st.h(i, j) - st.h(i, j + 1) == st.v(i, j) - st.v(i + 1, j));
      }
    }
  });
}

TEST_CASE("genericity flag and constructor invariants") {
  SpectralConfig ok(1.1, {0.1, 0.5}, {0.3, 0.9});
  CHECK(ok.generic());
  CHECK(ok.separation() == doctest::Approx(std::sin(0.2)));
  // coincidence mod pi defeats genericity even with distinct raw values
  SpectralConfig wrapped(1.1, {0.1, 0.1 + kPi}, {0.5, 0.9});
  CHECK_FALSE(wrapped.generic());
  CHECK(wrapped.generic(-1.0));  // threshold is configurable
  CHECK_THROWS_AS(SpectralConfig(1.1, {0.1, 0.2}, {0.3}), DimensionMismatch);
  CHECK_THROWS_AS(SpectralConfig(1.1, {}, {}), DimensionMismatch);
}
