#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sixv/bigint.hpp"
#include "sixv/model.hpp"

namespace sixv {

struct EnumOptions {
  // Hard stop for exhaustive enumeration; n = 8 is ~1.1e7 states and the
  // practical desk-scale limit.  Raise explicitly if you mean it.
  int ceiling = 8;
  // Worker threads for the reducing entry points (brute_z, count tables).
  // The state tree is split at the first row's configuration; partial
  // results merge associatively, so floating-point sums are reproducible
  // only up to summation order while integer counts are order-independent.
  int threads = 1;
};

using StateVisitor = std::function<void(const SixVertexState&)>;

// Visits every domain-wall state of order n exactly once, sequentially.
// The state reference is only valid during the call.
void for_each_state(int n, const StateVisitor& visit, const EnumOptions& opt = {});

// Same, restricted to states whose top-row c-vertex (the ASM top-row 1)
// sits in column top_r (1-based).  The n subtrees for top_r = 1..n
// partition the full state set; this is the parallel split point.
void for_each_state_with_top(int n, int top_r, const StateVisitor& visit,
                             const EnumOptions& opt = {});

// Materializes all states; meant for small n.
std::vector<SixVertexState> enumerate_states(int n, const EnumOptions& opt = {});

// Number of states of order n, i.e. the ASM count A_n.
BigInt count_states(int n, const EnumOptions& opt = {});

// Brute-force partition function: sum over all states of state_weight.
double brute_z(const SpectralConfig& cfg, WeightConvention conv, const EnumOptions& opt = {});

enum class CountKind { refined_top, double_top_bottom, double_top_left };

// Exact-integer refined boundary statistics.
//   refined_top:        at(r),     r  in [1, n]   -- A(n,r)
//   double_top_bottom:  at(r, rt), both in [1, n] -- B(n;r,rt)
//   double_top_left:    at(r, rt), both in [2, n] -- C(n;r,rt), plus `corner`
//                       = A(n,1), the states whose top-row 1 is in column 1.
struct CountTable {
  int n = 0;
  CountKind kind = CountKind::refined_top;
  std::vector<BigInt> data;
  BigInt corner;

  const BigInt& at(int r) const;
  const BigInt& at(int r, int rt) const;
  // Zero outside the stored index range; the identity suites extend the
  // tables by zero at out-of-range indices.
  BigInt at_or_zero(int r, int rt) const;
  BigInt total() const;
};

CountTable refined_top(int n, const EnumOptions& opt = {});
CountTable double_top_bottom(int n, const EnumOptions& opt = {});
CountTable double_top_left(int n, const EnumOptions& opt = {});

}  // namespace sixv
