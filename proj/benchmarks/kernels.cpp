// Serial reference vs OpenMP for the hot kernels, on the desk-scale mesh.
// Argument 0 = serial, 1 = parallel.

#include "urbanrom/ad.hpp"
#include "urbanrom/ins.hpp"
#include "urbanrom/mesh.hpp"
#include "urbanrom/pod.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace urbanrom;

namespace {

std::shared_ptr<const TaylorHoodSpace> desk_space() {
  static const auto space = std::make_shared<const TaylorHoodSpace>(
      std::make_shared<const Mesh>(synth_urban_mesh(2, 3, 50.0, 0, {300.0, 300.0, 6})));
  return space;
}

Vec random_vec(int n, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  Vec v(n);
  for (auto& x : v) x = d(gen);
  return v;
}

Execution mode(const benchmark::State& s) { return s.range(0) ? Execution::Parallel : Execution::Serial; }

void BM_convection_jacobian(benchmark::State& state) {
  const auto space = desk_space();
  const Vec u = random_vec(space->velocity_dofs(), 1);
  SpMat J;
  for (auto _ : state) benchmark::DoNotOptimize(assemble_convection(*space, u, &J, mode(state)));
}

void BM_stiffness(benchmark::State& state) {
  const auto space = desk_space();
  for (auto _ : state) benchmark::DoNotOptimize(assemble_stiffness(*space, mode(state)));
}

void BM_ad_operators(benchmark::State& state) {
  const auto space = desk_space();
  AdProblem pb;
  pb.space = space;
  pb.kappa = 1.0;
  pb.wind = random_vec(space->velocity_dofs(), 2);
  pb.source = {{100.0, 60.0}, 25.0, 1.0};
  pb.initial = gaussian_source(space->mesh(), pb.source);
  for (auto _ : state) benchmark::DoNotOptimize(assemble_ad(pb, mode(state)));
}

void BM_correlation_matrix(benchmark::State& state) {
  const auto space = desk_space();
  const SpMat M = assemble_velocity_mass(*space);
  Mat S(space->velocity_dofs(), 50);
  for (int k = 0; k < S.cols(); ++k) S.col(k) = random_vec(space->velocity_dofs(), 10 + k);
  for (auto _ : state) benchmark::DoNotOptimize(correlation_matrix(S, &M, mode(state)));
}

}  // namespace

BENCHMARK(BM_convection_jacobian)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_stiffness)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ad_operators)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_correlation_matrix)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
