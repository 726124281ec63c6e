// Serial reference kernels vs the OpenMP kernels on the 6,890-vertex fixture.
// Thread count follows GEOKERNEL_THREADS (default: OpenMP's choice).

#include <benchmark/benchmark.h>

#include <vector>

#include "geokernel/geodesic.hpp"
#include "geokernel/intrinsic.hpp"
#include "geokernel/laplacian.hpp"
#include "geokernel/parallel.hpp"
#include "geokernel/reference.hpp"
#include "geokernel/sampling.hpp"
#include "geokernel/synthetic.hpp"

using namespace geokernel;

namespace {

struct Fixture {
  TriMesh mesh = synthetic::body_proxy();
  AdjacencyIndex adj = build_adjacency(mesh);
  TriMesh generated = synthetic::jitter(mesh, 1e-2 * synthetic::mean_edge_length(mesh), 1);
  RegionSet regions = sample_regions(mesh, adj, SamplingConfig{}, {});
};

const Fixture& fixture() {
  static const Fixture f;
  return f;
}

void BM_PairwiseGeodesic_Serial(benchmark::State& state) {
  const Fixture& f = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(reference::pairwise_geodesic(f.mesh, f.adj, f.regions.regions[0]));
}

void BM_PairwiseGeodesic_Parallel(benchmark::State& state) {
  const Fixture& f = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(pairwise_geodesic(f.mesh, f.adj, f.regions.regions[0]));
}

void BM_RegionalLoss_Serial(benchmark::State& state) {
  const Fixture& f = fixture();
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::intrinsic_loss(f.mesh, f.generated.vertices, f.adj, f.regions, true));
  }
}

void BM_RegionalLoss_Parallel(benchmark::State& state) {
  const Fixture& f = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(intrinsic_loss(f.mesh, f.generated.vertices, f.adj, f.regions, true));
}

void BM_Smooth100_Serial(benchmark::State& state) {
  const Fixture& f = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(reference::laplacian_smooth(f.mesh, f.adj, {100, 0.5}));
}

void BM_Smooth100_Parallel(benchmark::State& state) {
  const Fixture& f = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(laplacian_smooth(f.mesh, f.adj, {100, 0.5}));
}

}  // namespace

BENCHMARK(BM_PairwiseGeodesic_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairwiseGeodesic_Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RegionalLoss_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RegionalLoss_Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Smooth100_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Smooth100_Parallel)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  if (const auto n = parallel::resolve_thread_count(std::nullopt)) parallel::set_thread_count(*n);
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
