#include <benchmark/benchmark.h>

#include "dirafem/assembly.hpp"
#include "dirafem/solver.hpp"

namespace {

using namespace dirafem;

const PhysicalParams kParams{1.0, kDefaultSpeedOfLight, 118, -2};

MeshConfig mesh_config(int n) { return {7.5e-5, 10.0, n, 1e-4}; }

void BM_MeshGeneration(benchmark::State& state) {
  const MeshConfig cfg = mesh_config(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Mesh mesh = generate_exponential(cfg);
    benchmark::DoNotOptimize(mesh.nodes().data());
  }
}
BENCHMARK(BM_MeshGeneration)->Arg(600)->Arg(2000);

void BM_IntegralFamilies(benchmark::State& state) {
  const Mesh mesh = generate_exponential(mesh_config(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    for (IntegralSpec spec : {IntegralSpec{0, 0, 0}, IntegralSpec{1, 0, 0},
                              IntegralSpec{1, 1, 0}, IntegralSpec{0, 0, 1},
                              IntegralSpec{1, 0, 1}}) {
      TriDiag t = assemble_integral(mesh, spec);
      benchmark::DoNotOptimize(t);
    }
  }
}
BENCHMARK(BM_IntegralFamilies)->Arg(600)->Arg(2000);

void BM_AssembleStabilized(benchmark::State& state) {
  const Mesh mesh = generate_exponential(mesh_config(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    Pencil p = assemble_supg(mesh, kParams, PotentialModel::point());
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_AssembleStabilized)->Arg(600)->Arg(2000);

void BM_AssembleExtended(benchmark::State& state) {
  const Mesh mesh = generate_two_segment(1.5e-4, 10.0, 40, 560, 1e-4);
  const PotentialModel model = PotentialModel::extended_uniform(1.5e-4);
  for (auto _ : state) {
    Pencil p = assemble_supg(mesh, kParams, model);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_AssembleExtended);

void BM_SolvePencil(benchmark::State& state) {
  const Mesh mesh = generate_exponential(mesh_config(static_cast<int>(state.range(0))));
  const Pencil p = assemble_supg(mesh, kParams, PotentialModel::point());
  for (auto _ : state) {
    RawSpectrum raw = solve_pencil(p);
    benchmark::DoNotOptimize(raw.eigenvalues.data());
  }
}
BENCHMARK(BM_SolvePencil)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_SparseApply(benchmark::State& state) {
  const Mesh mesh = generate_exponential(mesh_config(static_cast<int>(state.range(0))));
  const Pencil p = assemble_supg(mesh, kParams, PotentialModel::point());
  std::vector<double> x(p.size(), 1.0), y(p.size(), 0.0);
  for (auto _ : state) {
    p.left.apply(x.data(), y.data());
    benchmark::DoNotOptimize(y.data());
  }
}
BENCHMARK(BM_SparseApply)->Arg(600)->Arg(2000);

}  // namespace

BENCHMARK_MAIN();
