#include <benchmark/benchmark.h>

#include "hmf/equilibria.hpp"
#include "hmf/integrator.hpp"
#include "hmf/linstab.hpp"
#include "hmf/rmt.hpp"
#include "hmf/state.hpp"

namespace {

hmf::ParticleState perturbed(std::size_t n) {
  return hmf::perturb(hmf::quiet_start(n), {hmf::PerturbationSpec::default_epsilon(n), 1});
}

void BM_Forces(benchmark::State& st) {
  const auto s = perturbed(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(hmf::forces(s));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(BM_Forces)->RangeMultiplier(10)->Range(1000, 100000);

void BM_StepYoshida(benchmark::State& st) {
  auto s = perturbed(static_cast<std::size_t>(st.range(0)));
  std::int64_t k = 0;
  for (auto _ : st) hmf::step_in_place(s, 0.05, hmf::Scheme::kYoshida4, k++);
  st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(BM_StepYoshida)->RangeMultiplier(10)->Range(1000, 100000);

void BM_StepCompensated(benchmark::State& st) {
  auto s = perturbed(static_cast<std::size_t>(st.range(0)));
  std::int64_t k = 0;
  for (auto _ : st) {
    hmf::step_in_place(s, 0.05, hmf::Scheme::kYoshida4, k++, hmf::Summation::kCompensated);
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(BM_StepCompensated)->Arg(100000);

void BM_ExactGrowthRate(benchmark::State& st) {
  const auto s = hmf::random_sym_bicluster(static_cast<std::size_t>(st.range(0)),
                                           hmf::UniformAngles{1.0}, 3);
  for (auto _ : st) benchmark::DoNotOptimize(hmf::exact_growth_rate(s));
}
BENCHMARK(BM_ExactGrowthRate)->RangeMultiplier(10)->Range(100, 100000);

void BM_DenseJacobi(benchmark::State& st) {
  const auto s = hmf::random_sym_bicluster(static_cast<std::size_t>(st.range(0)),
                                           hmf::UniformAngles{1.0}, 3);
  for (auto _ : st) benchmark::DoNotOptimize(hmf::dense_growth_rate(s));
}
BENCHMARK(BM_DenseJacobi)->RangeMultiplier(2)->Range(32, 256);

void BM_MomentsGaussian(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(hmf::moments_gaussian(0.5));
}
BENCHMARK(BM_MomentsGaussian);

void BM_RmtPredict(benchmark::State& st) {
  const auto m = hmf::moments_uniform(0.8);
  for (auto _ : st) benchmark::DoNotOptimize(hmf::rmt_predict(1000, m));
}
BENCHMARK(BM_RmtPredict);

}  // namespace

BENCHMARK_MAIN();
