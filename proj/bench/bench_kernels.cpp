// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "skewfree/autom.hpp"
#include "skewfree/kernels.hpp"

using namespace skewfree;

namespace {

Poly henon_iterate(int m) {
  auto s = henon_paper(Rat(1), Rat(1));
  return orbit_images(s, m).back().first;
}

void BM_MulSerial(benchmark::State& st) {
  Poly f = henon_iterate(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::serial::mul(f, f));
  st.counters["terms"] = static_cast<double>(f.size());
}

void BM_MulParallel(benchmark::State& st) {
  Poly f = henon_iterate(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::parallel::mul(f, f));
  st.counters["terms"] = static_cast<double>(f.size());
}

std::vector<std::pair<ExpVec, ExpVec>> rogalski_choices(int n) {
  IntMat2 a = IntMat2{1, 1, 1, 2}.transpose(), cur = IntMat2::identity();
  std::vector<std::pair<ExpVec, ExpVec>> out;
  for (int k = 0; k < n; ++k) {
    out.push_back({cur.apply({1, 0}), cur.apply({0, 1})});
    cur = a * cur;
  }
  return out;
}

void BM_SumsetSerial(benchmark::State& st) {
  auto ch = rogalski_choices(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::serial::sumset_bruteforce(ch));
}

void BM_SumsetParallel(benchmark::State& st) {
  auto ch = rogalski_choices(static_cast<int>(st.range(0)));
  for (auto _ : st) {
    std::vector<ExpVec> s{{0, 0}};
    for (const auto& [u, v] : ch) s = kernels::parallel::sumset_step(s, u, v);
    benchmark::DoNotOptimize(s.size());
  }
}

std::vector<Poly> henon_level(int n, const Poly** fa, const Poly** fb) {
  static auto orbit = orbit_images(henon_paper(Rat(1), Rat(1)), 8);
  std::vector<Poly> level{Poly::constant(Rat(1), Mode::Poly)};
  for (int k = 0; k < n; ++k)
    level = kernels::serial::expand_level(level, orbit[k].first, orbit[k].second);
  *fa = &orbit[n].first;
  *fb = &orbit[n].second;
  return level;
}

void BM_ExpandSerial(benchmark::State& st) {
  const Poly *fa, *fb;
  auto level = henon_level(static_cast<int>(st.range(0)), &fa, &fb);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::serial::expand_level(level, *fa, *fb));
}

void BM_ExpandParallel(benchmark::State& st) {
  const Poly *fa, *fb;
  auto level = henon_level(static_cast<int>(st.range(0)), &fa, &fb);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::parallel::expand_level(level, *fa, *fb));
}

}  // namespace

BENCHMARK(BM_MulSerial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MulParallel)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SumsetSerial)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SumsetParallel)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExpandSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExpandParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
