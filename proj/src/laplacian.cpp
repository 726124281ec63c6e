#include "geokernel/laplacian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>

#include "geokernel/error.hpp"
#include "geokernel/objective.hpp"

namespace geokernel {
namespace {

// Sample-elimination weight parameters (alpha, beta, gamma).
constexpr double kWeightExponent = 8.0;
constexpr double kLimitBeta = 0.65;
constexpr double kLimitGamma = 1.5;

void umbrella_step(const AdjacencyIndex& adj, std::span<const Vec3> in, std::span<Vec3> out, double step) {
  const auto count = static_cast<long long>(in.size());
#pragma omp parallel for schedule(static)
  for (long long j = 0; j < count; ++j) {
    const auto ring = adj.ring(static_cast<VertexId>(j));
    if (ring.empty()) {
      out[j] = in[j];
      continue;
    }
    Vec3 mean;
    for (VertexId u : ring) mean += in[u];
    mean *= 1.0 / static_cast<double>(ring.size());
    out[j] = in[j] + step * (mean - in[j]);
  }
}

struct CellKey {
  std::int64_t x, y, z;
  bool operator==(const CellKey&) const = default;
};

struct CellHash {
  std::size_t operator()(const CellKey& k) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(k.x) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(k.y) * 0xC2B2AE3D27D4EB4FULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::uint64_t>(k.z) * 0x165667B19E3779F9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

void validate(const SmoothingParams& params) {
  if (params.iterations < 0 || params.iterations > kMaxSmoothingIterations) {
    throw Error("smoothing iterations must be in [0, " + std::to_string(kMaxSmoothingIterations) + "], got " +
                std::to_string(params.iterations));
  }
  if (!(params.step > 0.0 && params.step <= 1.0)) {
    throw Error("smoothing step lambda must be in (0, 1], got " + std::to_string(params.step));
  }
}

TriMesh laplacian_smooth(const TriMesh& mesh, const AdjacencyIndex& adj, const SmoothingParams& params) {
  validate(params);
  validate(mesh);
  if (adj.vertex_count() != mesh.vertex_count()) throw Error("adjacency does not match the mesh");
  TriMesh out = mesh;
  std::vector<Vec3> scratch(mesh.vertex_count());
  for (int it = 0; it < params.iterations; ++it) {
    umbrella_step(adj, out.vertices, scratch, params.step);
    out.vertices.swap(scratch);
  }
  return out;
}

double membrane_energy(const AdjacencyIndex& adj, std::span<const Vec3> positions) {
  if (positions.size() != adj.vertex_count()) throw Error("position count does not match adjacency");
  double energy = 0.0;
  for (std::size_t j = 0; j < positions.size(); ++j) {
    const auto ring = adj.ring(static_cast<VertexId>(j));
    if (ring.empty()) continue;
    Vec3 mean;
    for (VertexId u : ring) mean += positions[u];
    mean *= 1.0 / static_cast<double>(ring.size());
    energy += squared_norm(positions[j] - mean);
  }
  return energy;
}

PointSample poisson_disk_downsample(const TriMesh& mesh, std::size_t target_points, std::uint64_t rng_seed) {
  validate(mesh);
  const std::size_t total = mesh.vertex_count();
  if (target_points < 1 || target_points > total) {
    throw Error("target point count " + std::to_string(target_points) + " outside [1, " + std::to_string(total) +
                "]");
  }
  PointSample out;
  if (target_points == total) {
    out.indices.resize(total);
    std::iota(out.indices.begin(), out.indices.end(), VertexId{0});
    out.points = mesh.vertices;
    return out;
  }

  const auto& pts = mesh.vertices;
  Vec3 lo = pts.front();
  Vec3 hi = pts.front();
  for (const Vec3& p : pts) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
  }
  double area = surface_area(mesh);
  if (!(area > 0.0)) {
    const Vec3 ext = hi - lo;
    area = std::max({ext.x * ext.y, ext.y * ext.z, ext.x * ext.z, squared_norm(ext)});
  }
  const double n_ratio = static_cast<double>(target_points) / static_cast<double>(total);
  double d_max = 2.0 * std::sqrt(area / (2.0 * std::sqrt(3.0) * static_cast<double>(target_points)));
  if (!(d_max > 0.0)) d_max = 1.0;
  const double d_min = d_max * kLimitBeta * (1.0 - std::pow(n_ratio, kLimitGamma));
  auto weight = [&](double d) { return std::pow(1.0 - std::max(d, d_min) / d_max, kWeightExponent); };

  auto cell_of = [&](const Vec3& p) {
    return CellKey{static_cast<std::int64_t>(std::floor((p.x - lo.x) / d_max)),
                   static_cast<std::int64_t>(std::floor((p.y - lo.y) / d_max)),
                   static_cast<std::int64_t>(std::floor((p.z - lo.z) / d_max))};
  };
  std::unordered_map<CellKey, std::vector<VertexId>, CellHash> grid;
  for (std::size_t i = 0; i < total; ++i) grid[cell_of(pts[i])].push_back(static_cast<VertexId>(i));

  // Neighbor lists within d_max, in ascending index order.
  std::vector<std::vector<std::pair<VertexId, double>>> near(total);
  const auto count = static_cast<long long>(total);
#pragma omp parallel for schedule(dynamic, 64)
  for (long long i = 0; i < count; ++i) {
    const CellKey c = cell_of(pts[i]);
    auto& list = near[i];
    for (std::int64_t dx = -1; dx <= 1; ++dx)
      for (std::int64_t dy = -1; dy <= 1; ++dy)
        for (std::int64_t dz = -1; dz <= 1; ++dz) {
          const auto it = grid.find({c.x + dx, c.y + dy, c.z + dz});
          if (it == grid.end()) continue;
          for (VertexId j : it->second) {
            if (j == static_cast<VertexId>(i)) continue;
            const double d = distance(pts[i], pts[j]);
            if (d < d_max) list.emplace_back(j, weight(d));
          }
        }
    std::sort(list.begin(), list.end());
  }

  std::vector<std::uint32_t> tie_rank(total);
  std::iota(tie_rank.begin(), tie_rank.end(), 0u);
  std::shuffle(tie_rank.begin(), tie_rank.end(), std::mt19937_64(rng_seed));

  std::vector<double> w(total, 0.0);
  for (std::size_t i = 0; i < total; ++i) {
    for (const auto& [j, wij] : near[i]) w[i] += wij;
  }
  using Entry = std::tuple<double, std::uint32_t, VertexId>;
  std::set<Entry, std::greater<>> heap;
  for (std::size_t i = 0; i < total; ++i) heap.emplace(w[i], tie_rank[i], static_cast<VertexId>(i));

  std::vector<char> alive(total, 1);
  for (std::size_t remaining = total; remaining > target_points; --remaining) {
    const auto [wi, rank_i, i] = *heap.begin();
    heap.erase(heap.begin());
    alive[i] = 0;
    for (const auto& [j, wij] : near[i]) {
      if (!alive[j]) continue;
      heap.erase({w[j], tie_rank[j], j});
      w[j] -= wij;
      heap.emplace(w[j], tie_rank[j], j);
    }
  }

  for (std::size_t i = 0; i < total; ++i) {
    if (!alive[i]) continue;
    out.indices.push_back(static_cast<VertexId>(i));
    out.points.push_back(pts[i]);
  }
  return out;
}

std::vector<int> draw_group_iterations(std::size_t group_size, std::uint64_t rng_seed) {
  if (group_size < 1) throw Error("Laplacian group size must be >= 1");
  std::mt19937_64 rng(rng_seed);
  std::uniform_int_distribution<int> draw(kMinGroupIterations, kMaxGroupIterations);
  std::vector<int> counts(group_size);
  for (int& c : counts) c = draw(rng);
  return counts;
}

LaplacianStack laplacian_group(const TriMesh& mesh, const AdjacencyIndex& adj, std::size_t group_size,
                               std::size_t target_points, std::uint64_t rng_seed) {
  validate(mesh);
  if (target_points < 1 || target_points > mesh.vertex_count()) {
    throw Error("target point count " + std::to_string(target_points) + " outside [1, " +
                std::to_string(mesh.vertex_count()) + "]");
  }
  LaplacianStack stack;
  stack.group_size = group_size;
  stack.target_points = target_points;
  stack.rng_seed = rng_seed;
  const std::vector<int> counts = draw_group_iterations(group_size, rng_seed);

  // Smooth incrementally through the sorted counts; synchronous updates make
  // this identical to smoothing each member from scratch.
  std::vector<std::size_t> by_count(group_size);
  std::iota(by_count.begin(), by_count.end(), std::size_t{0});
  std::stable_sort(by_count.begin(), by_count.end(), [&](std::size_t a, std::size_t b) { return counts[a] < counts[b]; });

  stack.members.resize(group_size);
  TriMesh current = mesh;
  int done = 0;
  for (std::size_t idx : by_count) {
    current = laplacian_smooth(current, adj, {counts[idx] - done, 0.5});
    done = counts[idx];
    stack.members[idx].iterations = counts[idx];
    stack.members[idx].sample = poisson_disk_downsample(current, target_points, rng_seed);
  }
  return stack;
}

double extrinsic_loss(double discriminator_score) { return nonsaturating_gen_loss(discriminator_score); }

}  // namespace geokernel
