#include "geokernel/intrinsic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dijkstra.hpp"
#include "geokernel/error.hpp"
#include "omp_util.hpp"

namespace geokernel {
namespace {

// Upper bound on accumulation blocks. Block boundaries depend only on the
// item count, never on the worker count.
constexpr std::size_t kMaxBlocks = 64;

struct PairGroup {
  std::span<const VertexId> members;
  std::vector<std::int32_t> rank;  // vertex -> slot in members, -1 outside
};

struct WorkItem {
  std::size_t group;
  std::size_t slot;
};

struct Scratch {
  detail::DijkstraWorkspace real;
  detail::DijkstraWorkspace gen;
  std::vector<double> real_row;
  std::vector<double> gen_row;
  std::vector<double> acc;

  explicit Scratch(std::size_t v) : real(v), gen(v) {}
};

// Distances from members[slot] to every member with a larger slot, written
// to row[b]. Throws when some of those members are unreachable.
void distances_to_later(detail::DijkstraWorkspace& ws, const AdjacencyIndex& adj, const PairGroup& g,
                        std::size_t slot, std::vector<double>& row) {
  const std::size_t need = g.members.size() - 1 - slot;
  std::size_t found = 0;
  ws.run(adj, g.members[slot], [&](VertexId u, double d) {
    const std::int32_t r = g.rank[u];
    if (r <= static_cast<std::int32_t>(slot)) return false;
    row[static_cast<std::size_t>(r)] = d;
    return ++found == need;
  });
  if (found != need) {
    for (std::size_t b = slot + 1; b < g.members.size(); ++b) {
      if (!ws.settled(g.members[b])) {
        throw DisconnectedMeshError("vertex " + std::to_string(g.members[b]) + " is unreachable from " +
                                        std::to_string(g.members[slot]) + " (disconnected edge graph)",
                                    g.members[b]);
      }
    }
  }
}

LossValue accumulate(const AdjacencyIndex& real_adj, const AdjacencyIndex& gen_adj,
                     std::span<const Vec3> generated, std::vector<PairGroup>& groups, bool want_gradient) {
  const std::size_t v = real_adj.vertex_count();
  std::vector<WorkItem> items;
  std::vector<std::size_t> group_pairs(groups.size(), 0);
  std::size_t total_pairs = 0;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const std::size_t m = groups[g].members.size();
    for (std::size_t a = 0; a + 1 < m; ++a) items.push_back({g, a});
    group_pairs[g] = m * (m - 1) / 2;
    total_pairs += group_pairs[g];
  }

  LossValue out;
  out.pair_count = total_pairs;
  if (want_gradient) out.gradient.assign(v, Vec3{});
  if (total_pairs == 0) {
    out.per_region.resize(groups.size());
    return out;
  }

  const std::size_t block_size = std::max<std::size_t>(1, (items.size() + kMaxBlocks - 1) / kMaxBlocks);
  const std::size_t block_count = (items.size() + block_size - 1) / block_size;
  std::vector<double> item_sums(items.size(), 0.0);
  std::vector<std::vector<Vec3>> block_grad(want_gradient ? block_count : 0);
  const double coeff_scale = -2.0 / static_cast<double>(total_pairs);

  detail::parallel_for(
      block_count, [v] { return Scratch(v); },
      [&](Scratch& s, std::size_t block) {
        std::vector<Vec3>* grad = nullptr;
        if (want_gradient) {
          block_grad[block].assign(v, Vec3{});
          grad = &block_grad[block];
        }
        const std::size_t end = std::min(items.size(), (block + 1) * block_size);
        for (std::size_t it = block * block_size; it < end; ++it) {
          const PairGroup& g = groups[items[it].group];
          const std::size_t a = items[it].slot;
          const std::size_t m = g.members.size();
          s.real_row.resize(m);
          s.gen_row.resize(m);
          distances_to_later(s.real, real_adj, g, a, s.real_row);
          distances_to_later(s.gen, gen_adj, g, a, s.gen_row);

          double sum = 0.0;
          for (std::size_t b = a + 1; b < m; ++b) {
            const double diff = s.real_row[b] - s.gen_row[b];
            sum += diff * diff;
          }
          item_sums[it] = sum;
          if (!grad) continue;

          // Push each target's coefficient up the fixed generated tree.
          const auto order = s.gen.order();
          std::vector<double>& acc = s.acc;
          acc.assign(order.size(), 0.0);
          for (std::size_t b = a + 1; b < m; ++b) {
            const double diff = s.real_row[b] - s.gen_row[b];
            acc[static_cast<std::size_t>(s.gen.slot(g.members[b]))] += coeff_scale * diff;
          }
          for (std::size_t slot = order.size(); slot-- > 1;) {
            const double c = acc[slot];
            if (c == 0.0) continue;
            const VertexId child = order[slot];
            const VertexId parent = s.gen.predecessor(child);
            const Vec3 edge = generated[child] - generated[parent];
            const double len = norm(edge);
            acc[static_cast<std::size_t>(s.gen.slot(parent))] += c;
            if (len == 0.0) continue;
            const Vec3 step = edge * (c / len);
            (*grad)[child] += step;
            (*grad)[parent] -= step;
          }
        }
      });

  out.per_region.resize(groups.size());
  std::vector<double> group_sums(groups.size(), 0.0);
  for (std::size_t it = 0; it < items.size(); ++it) group_sums[items[it].group] += item_sums[it];
  double total = 0.0;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    total += group_sums[g];
    out.per_region[g].pair_count = group_pairs[g];
    out.per_region[g].value = group_pairs[g] ? group_sums[g] / static_cast<double>(group_pairs[g]) : 0.0;
  }
  out.value = total / static_cast<double>(total_pairs);

  for (const auto& bg : block_grad) {
    for (std::size_t i = 0; i < v; ++i) out.gradient[i] += bg[i];
  }
  return out;
}

void check_generated(const TriMesh& real, std::span<const Vec3> generated, const AdjacencyIndex& adj) {
  validate_surface(real);
  if (generated.size() != real.vertex_count()) {
    throw Error("generated mesh has " + std::to_string(generated.size()) + " vertices, real mesh has " +
                std::to_string(real.vertex_count()));
  }
  if (adj.vertex_count() != real.vertex_count()) throw Error("adjacency does not match the real mesh");
  for (const Vec3& p : generated) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) {
      throw Error("generated vertex positions contain non-finite values");
    }
  }
}

}  // namespace

std::string_view to_string(GeodesicSource s) noexcept { return s == GeodesicSource::real ? "real" : "generated"; }

double LossValue::gradient_norm() const {
  double sq = 0.0;
  for (const Vec3& g : gradient) sq += squared_norm(g);
  return std::sqrt(sq);
}

RegionalGeodesicSet regional_geodesic(const TriMesh& mesh, const AdjacencyIndex& adj, const RegionSet& regions,
                                      GeodesicSource tag) {
  RegionalGeodesicSet out;
  out.source_tag = tag;
  out.region_matrices.reserve(regions.regions.size());
  for (const auto& region : regions.regions) {
    for (VertexId idx : region) {
      if (idx >= mesh.vertex_count()) throw Error("region vertex " + std::to_string(idx) + " out of range");
    }
    out.region_matrices.push_back(pairwise_geodesic(mesh, adj, region));
  }
  return out;
}

LossValue intrinsic_loss(const TriMesh& real, std::span<const Vec3> generated, const AdjacencyIndex& adj,
                         const RegionSet& regions, bool want_gradient) {
  check_generated(real, generated, adj);
  const std::size_t v = real.vertex_count();
  std::vector<PairGroup> groups(regions.regions.size());
  for (std::size_t r = 0; r < groups.size(); ++r) {
    const auto& members = regions.regions[r];
    groups[r].members = members;
    groups[r].rank.assign(v, -1);
    for (std::size_t a = 0; a < members.size(); ++a) {
      if (members[a] >= v) throw Error("region vertex " + std::to_string(members[a]) + " out of range");
      if (groups[r].rank[members[a]] >= 0) {
        throw Error("region " + std::to_string(r) + " lists vertex " + std::to_string(members[a]) + " twice");
      }
      groups[r].rank[members[a]] = static_cast<std::int32_t>(a);
    }
  }
  const AdjacencyIndex gen_adj = adj.with_positions(generated);
  LossValue out = accumulate(adj, gen_adj, generated, groups, want_gradient);
  for (std::size_t r = 0; r < out.per_region.size() && r < regions.seeds.size(); ++r) {
    out.per_region[r].seed = regions.seeds[r];
  }
  return out;
}

LossValue global_intrinsic_loss(const TriMesh& real, std::span<const Vec3> generated, const AdjacencyIndex& adj,
                                bool want_gradient) {
  check_generated(real, generated, adj);
  const std::size_t v = real.vertex_count();
  if (v > kAllPairsVertexLimit) {
    throw Error("global intrinsic loss limited to " + std::to_string(kAllPairsVertexLimit) + " vertices");
  }
  std::vector<VertexId> all(v);
  std::iota(all.begin(), all.end(), VertexId{0});
  std::vector<PairGroup> groups(1);
  groups[0].members = all;
  groups[0].rank.resize(v);
  std::iota(groups[0].rank.begin(), groups[0].rank.end(), 0);
  const AdjacencyIndex gen_adj = adj.with_positions(generated);
  LossValue out = accumulate(adj, gen_adj, generated, groups, want_gradient);
  out.per_region.clear();
  return out;
}

}  // namespace geokernel
