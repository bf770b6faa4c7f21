#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "sixv/closedform.hpp"
#include "sixv/enumerate.hpp"
#include "sixv/ikdet.hpp"
#include "sixv/rootuni.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

sixv::SpectralConfig spread_config(int n, double eta) {
  std::vector<double> xs(n), ys(n);
  for (int i = 0; i < n; ++i) xs[i] = 0.11 + 1.31 * i / (2.0 * n);
  for (int j = 0; j < n; ++j) ys[j] = 0.05 + 1.37 * j / (2.0 * n + 1);
  return {eta, xs, ys};
}

void BM_enumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  sixv::EnumOptions opt;
  opt.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sixv::count_states(n, opt));
  }
  state.SetItemsProcessed(state.iterations() * sixv::a_total(n).to_int64());
}
BENCHMARK(BM_enumerate)->Arg(4)->Arg(5)->Arg(6)->Arg(7);

void BM_enumerate_threaded(benchmark::State& state) {
  const int n = 7;
  sixv::EnumOptions opt;
  opt.threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sixv::count_states(n, opt));
  }
  state.SetItemsProcessed(state.iterations() * sixv::a_total(n).to_int64());
}
BENCHMARK(BM_enumerate_threaded)->Arg(1)->Arg(2)->Arg(4);

void BM_brute_z(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const sixv::SpectralConfig cfg = spread_config(n, 2 * kPi / 3);
  sixv::EnumOptions opt;
  opt.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sixv::brute_z(cfg, sixv::WeightConvention::signed_w, opt));
  }
}
BENCHMARK(BM_brute_z)->Arg(4)->Arg(5)->Arg(6);

void BM_ik_z(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const sixv::SpectralConfig cfg = spread_config(n, 2 * kPi / 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sixv::ik_z(cfg));
  }
}
BENCHMARK(BM_ik_z)->Arg(3)->Arg(5)->Arg(7);

void BM_f_from_z(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const sixv::SpectralConfig cfg = spread_config(n, 2 * kPi / 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sixv::f_from_z(cfg));
  }
}
BENCHMARK(BM_f_from_z)->Arg(2)->Arg(4)->Arg(6);

void BM_solve_null(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  // golden-ratio spread over the quasiperiod; equispaced nodes alias
  // frequency pairs and are genuinely rank-deficient
  std::vector<double> us(2 * n - 1);
  for (size_t j = 0; j < us.size(); ++j) {
    us[j] = std::fmod(0.131 + 0.6180339887 * kPi * (j + 1), kPi);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(sixv::solve_null(us));
  }
}
BENCHMARK(BM_solve_null)->Arg(2)->Arg(4)->Arg(6);

void BM_refined_tables(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  sixv::EnumOptions opt;
  opt.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sixv::double_top_bottom(n, opt));
  }
}
BENCHMARK(BM_refined_tables)->Arg(4)->Arg(5)->Arg(6);

void BM_double_gen_check(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  sixv::EnumOptions opt;
  opt.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sixv::double_gen_check(n, opt));
  }
}
BENCHMARK(BM_double_gen_check)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
