#include "sixv/enumerate.hpp"

#include <atomic>
#include <cmath>
#include <string>
#include <thread>

namespace sixv {

namespace {

void check_size(int n, const EnumOptions& opt) {
  if (n < 1) throw OutOfRange("enumerate: n must be >= 1");
  if (n > opt.ceiling) {
    throw SizeTooLarge("enumerate: n = " + std::to_string(n) + " above ceiling " +
                       std::to_string(opt.ceiling));
  }
}

// Row-by-row backtracking over edge orientations.  Within a row the walk
// goes left to right; the ice rule leaves a binary choice exactly when the
// incoming horizontal and vertical arrows agree, and forces the vertex
// otherwise.  A row must exit with h = -1, and the last row must emit only
// downward vertical edges.
class Dfs {
 public:
  Dfs(int n, const StateVisitor& visit) : n_(n), visit_(visit), st_(n) {}

  SixVertexState& state() { return st_; }

  void run_rows_from(int row) { descend(row, 0, +1); }

 private:
  int n_;
  const StateVisitor& visit_;
  SixVertexState st_;

  void row_done(int i) {
    if (i + 1 == n_) {
      visit_(st_);
    } else {
      descend(i + 1, 0, +1);
    }
  }

  void descend(int i, int j, int h_in) {
    if (j == n_) {
      if (h_in == -1) row_done(i);
      return;
    }
    const int vt = st_.v(i, j);
    const bool last = i == n_ - 1;
    if (h_in == +1) {
      if (vt == +1) {
        st_.set_h(i, j + 1, -1);
        st_.set_v(i + 1, j, -1);
        descend(i, j + 1, -1);  // c: horizontals meet, verticals leave
        if (!last) {
          st_.set_h(i, j + 1, +1);
          st_.set_v(i + 1, j, +1);
          descend(i, j + 1, +1);  // a: straight through
        }
      } else {
        st_.set_h(i, j + 1, +1);
        st_.set_v(i + 1, j, -1);
        descend(i, j + 1, +1);  // b, forced
      }
    } else {
      if (vt == +1) {
        if (!last) {
          st_.set_h(i, j + 1, -1);
          st_.set_v(i + 1, j, +1);
          descend(i, j + 1, -1);  // b, forced (dead on the last row)
        }
      } else {
        st_.set_h(i, j + 1, -1);
        st_.set_v(i + 1, j, -1);
        descend(i, j + 1, -1);  // a: straight through
        if (!last) {
          st_.set_h(i, j + 1, +1);
          st_.set_v(i + 1, j, +1);
          descend(i, j + 1, +1);  // c: verticals meet, horizontals leave
        }
      }
    }
  }
};

// Fills the (forced) top row for a given c-vertex column and recurses below.
// Top row pattern: a^(r-1) c b^(n-r), i.e. v flips downward exactly at r.
void run_with_top(int n, int top_r, const StateVisitor& visit) {
  Dfs dfs(n, visit);
  SixVertexState& st = dfs.state();
  for (int j = 0; j < n; ++j) {
    st.set_h(0, j + 1, j < top_r - 1 ? +1 : -1);
    st.set_v(1, j, j == top_r - 1 ? -1 : +1);
  }
  if (n == 1) {
    visit(st);
  } else {
    dfs.run_rows_from(1);
  }
}

// Splits the state tree at the first row's configuration.  One accumulator
// per subtree, merged in subtree order, so the result does not depend on
// which worker ran which subtree.
template <typename Acc>
Acc parallel_reduce(int n, const EnumOptions& opt, const std::function<Acc()>& make,
                    const std::function<void(Acc&, const SixVertexState&, int)>& fold,
                    const std::function<void(Acc&, Acc&&)>& merge) {
  std::vector<Acc> parts;
  parts.reserve(n);
  for (int r = 0; r < n; ++r) parts.push_back(make());

  const int workers = std::max(1, std::min(opt.threads, n));
  if (workers == 1) {
    for (int r = 1; r <= n; ++r) {
      run_with_top(n, r, [&](const SixVertexState& st) { fold(parts[r - 1], st, r); });
    }
  } else {
    std::atomic<int> next{1};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          int r = next.fetch_add(1);
          if (r > n) break;
          run_with_top(n, r, [&](const SixVertexState& st) { fold(parts[r - 1], st, r); });
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  Acc acc = std::move(parts[0]);
  for (int r = 1; r < n; ++r) merge(acc, std::move(parts[r]));
  return acc;
}

// 1-based column of the bottom row's 1: the unique upward edge entering the
// last row from above.
int bottom_one_column(const SixVertexState& st) {
  const int n = st.n();
  for (int j = 0; j < n; ++j) {
    if (st.v(n - 1, j) == +1) return j + 1;
  }
  throw IceViolation("state has no upward edge above the last row");
}

// 1-based row of the left column's 1: the unique row whose first horizontal
// step turns left.  The first ASM column never holds a -1.
int left_one_row(const SixVertexState& st) {
  const int n = st.n();
  for (int i = 0; i < n; ++i) {
    if (st.h(i, 1) == -1) return i + 1;
  }
  throw IceViolation("state has no leftward edge after the first column");
}

}  // namespace

void for_each_state(int n, const StateVisitor& visit, const EnumOptions& opt) {
  check_size(n, opt);
  for (int r = 1; r <= n; ++r) run_with_top(n, r, visit);
}

void for_each_state_with_top(int n, int top_r, const StateVisitor& visit,
                             const EnumOptions& opt) {
  check_size(n, opt);
  if (top_r < 1 || top_r > n) throw OutOfRange("for_each_state_with_top: bad column");
  run_with_top(n, top_r, visit);
}

std::vector<SixVertexState> enumerate_states(int n, const EnumOptions& opt) {
  std::vector<SixVertexState> out;
  for_each_state(n, [&](const SixVertexState& st) { out.push_back(st); }, opt);
  return out;
}

BigInt count_states(int n, const EnumOptions& opt) {
  check_size(n, opt);
  uint64_t total = parallel_reduce<uint64_t>(
      n, opt, [] { return uint64_t{0}; },
      [](uint64_t& acc, const SixVertexState&, int) { ++acc; },
      [](uint64_t& acc, uint64_t&& part) { acc += part; });
  return BigInt(static_cast<long long>(total));
}

double brute_z(const SpectralConfig& cfg, WeightConvention conv, const EnumOptions& opt) {
  const int n = cfg.n;
  check_size(n, opt);
  // Per-cell weight tables; the inner loop is then pure lookups.
  std::vector<double> wa(static_cast<size_t>(n) * n), wb(wa.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double d = cfg.xs[i] - cfg.ys[j];
      wa[static_cast<size_t>(i) * n + j] =
          boltzmann_weight({VertexLetter::a, 1}, d, cfg.eta, conv);
      wb[static_cast<size_t>(i) * n + j] =
          boltzmann_weight({VertexLetter::b, 1}, d, cfg.eta, conv);
    }
  }
  long double z = parallel_reduce<long double>(
      n, opt, [] { return 0.0L; },
      [&](long double& acc, const SixVertexState& st, int) {
        long double w = 1.0L;
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            VertexKind k = vertex_kind_at(st, i, j);
            if (k.letter == VertexLetter::a) {
              w *= wa[static_cast<size_t>(i) * n + j];
            } else if (k.letter == VertexLetter::b) {
              w *= wb[static_cast<size_t>(i) * n + j];
            }
          }
        }
        acc += w;
      },
      [](long double& acc, long double&& part) { acc += part; });
  return static_cast<double>(z);
}

const BigInt& CountTable::at(int r) const {
  if (kind != CountKind::refined_top || r < 1 || r > n) {
    throw OutOfRange("CountTable::at(r): bad index or kind");
  }
  return data[static_cast<size_t>(r - 1)];
}

const BigInt& CountTable::at(int r, int rt) const {
  if (kind == CountKind::double_top_bottom) {
    if (r < 1 || r > n || rt < 1 || rt > n) throw OutOfRange("CountTable::at: index");
    return data[static_cast<size_t>(r - 1) * n + (rt - 1)];
  }
  if (kind == CountKind::double_top_left) {
    if (r < 2 || r > n || rt < 2 || rt > n) throw OutOfRange("CountTable::at: index");
    return data[static_cast<size_t>(r - 2) * (n - 1) + (rt - 2)];
  }
  throw OutOfRange("CountTable::at(r,rt): kind holds a single index");
}

BigInt CountTable::at_or_zero(int r, int rt) const {
  if (kind == CountKind::double_top_bottom) {
    if (r < 1 || r > n || rt < 1 || rt > n) return 0;
  } else if (kind == CountKind::double_top_left) {
    if (r < 2 || r > n || rt < 2 || rt > n) return 0;
  } else {
    throw OutOfRange("CountTable::at_or_zero: kind holds a single index");
  }
  return at(r, rt);
}

BigInt CountTable::total() const {
  BigInt t = 0;
  for (const BigInt& v : data) t += v;
  return t;
}

namespace {

CountTable counts_from(int n, CountKind kind, size_t cells, uint64_t corner,
                       const std::vector<uint64_t>& raw) {
  CountTable t;
  t.n = n;
  t.kind = kind;
  t.data.reserve(cells);
  for (size_t i = 0; i < cells; ++i) t.data.push_back(BigInt(static_cast<long long>(raw[i])));
  t.corner = BigInt(static_cast<long long>(corner));
  return t;
}

}  // namespace

CountTable refined_top(int n, const EnumOptions& opt) {
  check_size(n, opt);
  auto counts = parallel_reduce<std::vector<uint64_t>>(
      n, opt, [&] { return std::vector<uint64_t>(n, 0); },
      [](std::vector<uint64_t>& acc, const SixVertexState&, int top_r) { ++acc[top_r - 1]; },
      [](std::vector<uint64_t>& acc, std::vector<uint64_t>&& part) {
        for (size_t i = 0; i < acc.size(); ++i) acc[i] += part[i];
      });
  return counts_from(n, CountKind::refined_top, n, 0, counts);
}

CountTable double_top_bottom(int n, const EnumOptions& opt) {
  check_size(n, opt);
  auto counts = parallel_reduce<std::vector<uint64_t>>(
      n, opt, [&] { return std::vector<uint64_t>(static_cast<size_t>(n) * n, 0); },
      [&](std::vector<uint64_t>& acc, const SixVertexState& st, int top_r) {
        int rt = bottom_one_column(st);
        ++acc[static_cast<size_t>(top_r - 1) * n + (rt - 1)];
      },
      [](std::vector<uint64_t>& acc, std::vector<uint64_t>&& part) {
        for (size_t i = 0; i < acc.size(); ++i) acc[i] += part[i];
      });
  return counts_from(n, CountKind::double_top_bottom, static_cast<size_t>(n) * n, 0, counts);
}

CountTable double_top_left(int n, const EnumOptions& opt) {
  check_size(n, opt);
  if (n == 1) {
    CountTable t;
    t.n = 1;
    t.kind = CountKind::double_top_left;
    t.corner = 1;
    return t;
  }
  // Cell 0 of the accumulator is the corner count A(n,1); the rest is the
  // (n-1)x(n-1) block with r, rt >= 2.  A top-row 1 in column 1 forces the
  // left-column 1 into row 1, so the corner absorbs exactly the top_r = 1
  // subtree.
  auto counts = parallel_reduce<std::vector<uint64_t>>(
      n, opt,
      [&] { return std::vector<uint64_t>(1 + static_cast<size_t>(n - 1) * (n - 1), 0); },
      [&](std::vector<uint64_t>& acc, const SixVertexState& st, int top_r) {
        if (top_r == 1) {
          ++acc[0];
        } else {
          int rt = left_one_row(st);
          ++acc[1 + static_cast<size_t>(top_r - 2) * (n - 1) + (rt - 2)];
        }
      },
      [](std::vector<uint64_t>& acc, std::vector<uint64_t>&& part) {
        for (size_t i = 0; i < acc.size(); ++i) acc[i] += part[i];
      });
  CountTable t;
  t.n = n;
  t.kind = CountKind::double_top_left;
  t.corner = BigInt(static_cast<long long>(counts[0]));
  for (size_t i = 1; i < counts.size(); ++i) {
    t.data.push_back(BigInt(static_cast<long long>(counts[i])));
  }
  return t;
}

}  // namespace sixv
