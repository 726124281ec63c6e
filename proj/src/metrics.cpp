#include "geokernel/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dijkstra.hpp"
#include "geokernel/error.hpp"
#include "omp_util.hpp"

namespace geokernel {
namespace {

void check_pair(const TriMesh& a, const TriMesh& b) {
  validate_surface(a);
  validate(b);
  if (!same_topology(a, b)) {
    throw Error("meshes differ in topology (" + std::to_string(a.vertex_count()) + "/" +
                std::to_string(a.face_count()) + " vs " + std::to_string(b.vertex_count()) + "/" +
                std::to_string(b.face_count()) + " vertices/faces, or different faces)");
  }
}

struct SourceBatch {
  VertexId source;
  std::vector<std::size_t> pair_ids;  // indices into the sampled pair list
};

}  // namespace

MetricReport interpolation_error(const TriMesh& a, const TriMesh& b, std::size_t sample_pairs,
                                 std::uint64_t rng_seed, DistortionMode mode) {
  check_pair(a, b);
  if (sample_pairs < 1) throw Error("interpolation error needs at least one sample pair");
  const std::size_t v = a.vertex_count();

  std::mt19937_64 rng(rng_seed);
  std::uniform_int_distribution<std::size_t> first(0, v - 1);
  std::uniform_int_distribution<std::size_t> second(0, v - 2);
  std::vector<std::pair<VertexId, VertexId>> pairs(sample_pairs);
  for (auto& [i, j] : pairs) {
    i = static_cast<VertexId>(first(rng));
    std::size_t k = second(rng);
    if (k >= i) ++k;
    j = static_cast<VertexId>(k);
  }

  std::vector<SourceBatch> batches;
  {
    std::vector<std::int64_t> batch_of(v, -1);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const VertexId s = pairs[p].first;
      if (batch_of[s] < 0) {
        batch_of[s] = static_cast<std::int64_t>(batches.size());
        batches.push_back({s, {}});
      }
      batches[static_cast<std::size_t>(batch_of[s])].pair_ids.push_back(p);
    }
  }

  const AdjacencyIndex adj_a = build_adjacency(a);
  const AdjacencyIndex adj_b = build_adjacency(b);
  std::vector<double> dist_a(pairs.size());
  std::vector<double> dist_b(pairs.size());

  struct Scratch {
    detail::DijkstraWorkspace ws;
    std::vector<int> wanted;
  };
  detail::parallel_for(
      batches.size(), [v] { return Scratch{detail::DijkstraWorkspace(v), std::vector<int>(v, 0)}; },
      [&](Scratch& s, std::size_t bi) {
        const SourceBatch& batch = batches[bi];
        for (const auto& [adj, out] :
             {std::pair<const AdjacencyIndex*, std::vector<double>*>{&adj_a, &dist_a}, {&adj_b, &dist_b}}) {
          std::size_t need = 0;
          for (std::size_t p : batch.pair_ids) {
            if (s.wanted[pairs[p].second]++ == 0) ++need;
          }
          std::size_t found = 0;
          s.ws.run(*adj, batch.source, [&](VertexId u, double) { return s.wanted[u] > 0 && ++found == need; });
          for (std::size_t p : batch.pair_ids) {
            const VertexId t = pairs[p].second;
            s.wanted[t] = 0;
            if (!s.ws.settled(t)) {
              throw DisconnectedMeshError("vertex " + std::to_string(t) + " unreachable from " +
                                              std::to_string(batch.source),
                                          t);
            }
            (*out)[p] = s.ws.distance(t);
          }
        }
      });

  double sum = 0.0;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    double term = std::abs(dist_a[p] - dist_b[p]);
    if (mode == DistortionMode::relative && dist_a[p] > 0.0) term /= dist_a[p];
    sum += term;
  }
  MetricReport report;
  report.name = mode == DistortionMode::relative ? "interpolation_error" : "interpolation_error_absolute";
  report.value = sum / static_cast<double>(pairs.size());
  report.sample_pairs = sample_pairs;
  report.rng_seed = rng_seed;
  return report;
}

MetricReport disentanglement_error(const TriMesh& a, const TriMesh& b) {
  validate(a);
  validate(b);
  if (!same_topology(a, b)) throw Error("meshes differ in topology");
  if (a.vertex_count() == 0) throw Error("disentanglement error of an empty mesh");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.vertex_count(); ++i) sum += distance(a.vertices[i], b.vertices[i]);
  MetricReport report;
  report.name = "disentanglement_error";
  report.value = sum / static_cast<double>(a.vertex_count());
  report.sample_pairs = a.vertex_count();
  return report;
}

}  // namespace geokernel
