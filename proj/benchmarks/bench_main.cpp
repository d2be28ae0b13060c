#include <benchmark/benchmark.h>

#include <random>

#include "langevin/diagnostics.hpp"
#include "langevin/sampler.hpp"

using namespace langevin;

namespace {

Eigen::VectorXd bulk_state(long d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Eigen::VectorXd x(d);
  for (long i = 0; i < d; ++i) x[i] = normal(rng);
  return x;
}

void BM_T1Scalar(benchmark::State& state) {
  double t = -0.73;
  for (auto _ : state) {
    benchmark::DoNotOptimize(t1_scalar(t, 0.2, 1.0));
    t = -t;
  }
}
BENCHMARK(BM_T1Scalar);

// fMALA moments on a product target stay O(d): no eigendecomposition.
void BM_FmalaMomentsProduct(benchmark::State& state) {
  const long d = state.range(0);
  TargetModel t = make_product_target(double_well_potential(), d);
  Eigen::VectorXd x = bulk_state(d, 1);
  const double h = 1.79 * 1.79 * std::pow(double(d), -0.2);
  for (auto _ : state)
    benchmark::DoNotOptimize(moments(ProposalVariant::fmala(), x, h, t));
  state.SetComplexityN(d);
}
BENCHMARK(BM_FmalaMomentsProduct)->Arg(1000)->Arg(10000)->Complexity();

// Full MH step on the tridiagonal-Jacobian target: fMALA keeps the
// structure (O(d)); mOMA pays a spectral decomposition.
void BM_StepAr1Fmala(benchmark::State& state) {
  const long d = state.range(0);
  TargetModel t = make_ar1_target({d, Ar1Link::Half});
  Eigen::VectorXd x = bulk_state(d, 2) * 0.3;
  double lp = t.log_density_unnorm(x);
  KernelSpec k = KernelSpec::single(
      ProposalVariant::fmala(), 1.79 * 1.79 * std::pow(double(d), -0.2));
  std::mt19937_64 rng(3);
  for (auto _ : state) benchmark::DoNotOptimize(mh_step(x, lp, k, t, rng));
  state.SetComplexityN(d);
}
BENCHMARK(BM_StepAr1Fmala)->Arg(100)->Arg(1000)->Complexity();

void BM_StepAr1Moma(benchmark::State& state) {
  const long d = state.range(0);
  TargetModel t = make_ar1_target({d, Ar1Link::Half});
  Eigen::VectorXd x = bulk_state(d, 2) * 0.3;
  double lp = t.log_density_unnorm(x);
  KernelSpec k = KernelSpec::single(
      ProposalVariant::moma(), 1.79 * 1.79 * std::pow(double(d), -0.2));
  std::mt19937_64 rng(3);
  for (auto _ : state) benchmark::DoNotOptimize(mh_step(x, lp, k, t, rng));
  state.SetComplexityN(d);
}
BENCHMARK(BM_StepAr1Moma)->Arg(100)->Arg(1000)->Complexity();

void BM_StepGaussianThroughput(benchmark::State& state) {
  const long d = 1000;
  TargetModel t = make_product_target(gaussian_potential(), d);
  Eigen::VectorXd x = bulk_state(d, 4);
  double lp = t.log_density_unnorm(x);
  KernelSpec k = KernelSpec::single(
      ProposalVariant::fmala(), 1.79 * 1.79 * std::pow(double(d), -0.2));
  std::mt19937_64 rng(5);
  for (auto _ : state) benchmark::DoNotOptimize(mh_step(x, lp, k, t, rng));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_StepGaussianThroughput);

}  // namespace

BENCHMARK_MAIN();
