#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "geokernel/mesh.hpp"

namespace geokernel {

inline constexpr int kMaxSmoothingIterations = 10'000;
inline constexpr int kMinGroupIterations = 1;
inline constexpr int kMaxGroupIterations = 100;
inline constexpr std::size_t kDefaultGroupSize = 3;
inline constexpr std::size_t kDefaultTargetPoints = 1024;

struct SmoothingParams {
  int iterations = 1;  // [0, kMaxSmoothingIterations]
  double step = 0.5;   // lambda, (0, 1]
};

void validate(const SmoothingParams& params);

/// Uniform umbrella smoothing. Each iteration moves every vertex by
/// lambda * (ring mean - p) using positions from the previous iteration.
/// Vertices with an empty ring stay put. Faces are copied unchanged.
TriMesh laplacian_smooth(const TriMesh& mesh, const AdjacencyIndex& adj, const SmoothingParams& params);

/// sum_j |p_j - mean(ring(j))|^2 over vertices with a non-empty ring.
double membrane_energy(const AdjacencyIndex& adj, std::span<const Vec3> positions);

/// A vertex subset together with the corresponding positions.
struct PointSample {
  std::vector<VertexId> indices;  // ascending
  std::vector<Vec3> points;
};

/// Weighted sample elimination over the mesh vertices: points are removed
/// one at a time, always the one with the densest neighborhood, until
/// `target_points` remain. The neighborhood radius comes from the surface
/// area. The seed only orders exact weight ties.
PointSample poisson_disk_downsample(const TriMesh& mesh, std::size_t target_points, std::uint64_t rng_seed);

struct LaplacianMember {
  int iterations = 0;
  PointSample sample;
};

struct LaplacianStack {
  std::vector<LaplacianMember> members;
  std::size_t group_size = kDefaultGroupSize;
  std::size_t target_points = kDefaultTargetPoints;
  std::uint64_t rng_seed = 0;
};

/// Iteration counts drawn uniformly from [1, 100] by a generator seeded with
/// `rng_seed`; each smoothed copy (lambda 0.5) is downsampled with the same
/// seed.
LaplacianStack laplacian_group(const TriMesh& mesh, const AdjacencyIndex& adj, std::size_t group_size,
                               std::size_t target_points, std::uint64_t rng_seed);

/// The iteration counts laplacian_group() would draw for this seed.
std::vector<int> draw_group_iterations(std::size_t group_size, std::uint64_t rng_seed);

/// -log(score) for a co-occurrence discriminator score in (0, 1).
double extrinsic_loss(double discriminator_score);

}  // namespace geokernel
