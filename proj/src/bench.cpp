#include "geokernel/bench.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "geokernel/error.hpp"
#include "geokernel/intrinsic.hpp"
#include "geokernel/synthetic.hpp"

namespace geokernel {
namespace {

template <class Fn>
double time_seconds(Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

std::string_view to_string(BenchMethod m) noexcept {
  switch (m) {
    case BenchMethod::global: return "global";
    case BenchMethod::regional_random: return "regional-random";
    case BenchMethod::regional_adaptive: return "regional-adaptive";
  }
  return "unknown";
}

double median(std::vector<double> samples) {
  if (samples.empty()) throw Error("median of an empty sample");
  std::sort(samples.begin(), samples.end());
  const std::size_t n = samples.size();
  return n % 2 ? samples[n / 2] : 0.5 * (samples[n / 2 - 1] + samples[n / 2]);
}

BenchResult bench(const TriMesh& mesh, const BenchConfig& cfg) {
  validate_surface(mesh);
  if (cfg.repetitions < 1) throw Error("bench needs at least one repetition");
  BenchResult result;
  SamplingConfig sampling = cfg.sampling;
  if (sampling.region_size > mesh.vertex_count()) {
    result.warnings.push_back("region size k=" + std::to_string(sampling.region_size) + " clamped to V=" +
                              std::to_string(mesh.vertex_count()));
    sampling.region_size = mesh.vertex_count();
  }
  validate(sampling);

  const AdjacencyIndex adj = build_adjacency(mesh);
  const TriMesh generated =
      synthetic::jitter(mesh, cfg.noise * synthetic::mean_edge_length(mesh), cfg.rng_seed);

  auto run = [&](BenchMethod method) {
    BenchReport report;
    report.vertex_count = mesh.vertex_count();
    report.method = method;
    TraversalState state;
    for (std::size_t rep = 0; rep < cfg.repetitions; ++rep) {
      LossValue loss;
      report.samples.push_back(time_seconds([&] {
        switch (method) {
          case BenchMethod::global:
            loss = global_intrinsic_loss(mesh, generated.vertices, adj, cfg.with_gradient);
            break;
          case BenchMethod::regional_random: {
            const RegionSet regions = sample_random_regions(mesh, adj, sampling, cfg.rng_seed + rep);
            loss = intrinsic_loss(mesh, generated.vertices, adj, regions, cfg.with_gradient);
            break;
          }
          case BenchMethod::regional_adaptive: {
            RegionSet regions = sample_regions(mesh, adj, sampling, state);
            state = std::move(regions.traversal_state);
            loss = intrinsic_loss(mesh, generated.vertices, adj, regions, cfg.with_gradient);
            break;
          }
        }
      }));
      report.pair_count = loss.pair_count;
      report.loss_value = loss.value;
    }
    report.wall_time_seconds = median(report.samples);
    return report;
  };

  result.reports.push_back(run(BenchMethod::global));
  result.reports.push_back(run(BenchMethod::regional_random));
  result.reports.push_back(run(BenchMethod::regional_adaptive));
  const double global_time = result.reports.front().wall_time_seconds;
  for (BenchReport& r : result.reports) {
    r.speedup_vs_global = r.wall_time_seconds > 0.0 ? global_time / r.wall_time_seconds : 0.0;
  }
  return result;
}

}  // namespace geokernel
