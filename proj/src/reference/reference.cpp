#include "geokernel/reference.hpp"

#include <string>

#include "geokernel/error.hpp"
#include "geokernel/geodesic.hpp"

namespace geokernel::reference {

std::vector<double> pairwise_geodesic(const TriMesh& mesh, const AdjacencyIndex& adj,
                                      std::span<const VertexId> subset) {
  const std::size_t m = subset.size();
  std::vector<double> out(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    const SingleSourceResult sweep = single_source_geodesic(mesh, adj, subset[a]);
    for (std::size_t b = 0; b < m; ++b) out[a * m + b] = sweep.distances[subset[b]];
  }
  return out;
}

LossValue intrinsic_loss(const TriMesh& real, std::span<const Vec3> generated, const AdjacencyIndex& adj,
                         const RegionSet& regions, bool want_gradient) {
  if (generated.size() != real.vertex_count()) throw Error("generated vertex count mismatch");
  TriMesh gen_mesh = real;
  gen_mesh.vertices.assign(generated.begin(), generated.end());
  const AdjacencyIndex gen_adj = adj.with_positions(generated);

  LossValue out;
  for (const auto& region : regions.regions) out.pair_count += region.size() * (region.size() - 1) / 2;
  if (want_gradient) out.gradient.assign(real.vertex_count(), Vec3{});
  const double scale = out.pair_count ? 1.0 / static_cast<double>(out.pair_count) : 0.0;

  double total = 0.0;
  for (std::size_t r = 0; r < regions.regions.size(); ++r) {
    const auto& region = regions.regions[r];
    RegionLoss rl;
    rl.seed = r < regions.seeds.size() ? regions.seeds[r] : 0;
    rl.pair_count = region.size() * (region.size() - 1) / 2;
    double region_sum = 0.0;
    for (std::size_t i = 0; i < region.size(); ++i) {
      const SingleSourceResult real_sweep = single_source_geodesic(real, adj, region[i]);
      const SingleSourceResult gen_sweep = single_source_geodesic(gen_mesh, gen_adj, region[i]);
      for (std::size_t j = i + 1; j < region.size(); ++j) {
        const double diff = real_sweep.distances[region[j]] - gen_sweep.distances[region[j]];
        region_sum += diff * diff;
        if (!want_gradient) continue;
        const double coeff = -2.0 * diff * scale;
        for (VertexId v = region[j]; v != region[i]; v = gen_sweep.predecessors[v]) {
          const VertexId p = gen_sweep.predecessors[v];
          const Vec3 edge = generated[v] - generated[p];
          const double len = norm(edge);
          if (len == 0.0) continue;
          out.gradient[v] += edge * (coeff / len);
          out.gradient[p] -= edge * (coeff / len);
        }
      }
    }
    rl.value = rl.pair_count ? region_sum / static_cast<double>(rl.pair_count) : 0.0;
    total += region_sum;
    out.per_region.push_back(rl);
  }
  out.value = total * scale;
  return out;
}

TriMesh laplacian_smooth(const TriMesh& mesh, const AdjacencyIndex& adj, const SmoothingParams& params) {
  validate(params);
  TriMesh out = mesh;
  std::vector<Vec3> next(mesh.vertex_count());
  for (int it = 0; it < params.iterations; ++it) {
    for (std::size_t j = 0; j < out.vertex_count(); ++j) {
      const auto ring = adj.ring(static_cast<VertexId>(j));
      if (ring.empty()) {
        next[j] = out.vertices[j];
        continue;
      }
      Vec3 mean;
      for (VertexId u : ring) mean += out.vertices[u];
      mean *= 1.0 / static_cast<double>(ring.size());
      next[j] = out.vertices[j] + params.step * (mean - out.vertices[j]);
    }
    out.vertices.swap(next);
  }
  return out;
}

}  // namespace geokernel::reference
