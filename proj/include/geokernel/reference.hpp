#pragma once

// Serial reference kernels. They use the plainest algorithm for each job
// (full single-source sweeps, per-pair path walks) and exist so tests and
// benchmarks can check and time the parallel kernels against them.

#include <span>
#include <vector>

#include "geokernel/intrinsic.hpp"
#include "geokernel/laplacian.hpp"
#include "geokernel/mesh.hpp"
#include "geokernel/sampling.hpp"

namespace geokernel::reference {

/// Row-major |subset| x |subset| distances from full single-source sweeps.
std::vector<double> pairwise_geodesic(const TriMesh& mesh, const AdjacencyIndex& adj,
                                      std::span<const VertexId> subset);

/// Pairs visited one by one; the gradient walks each pair's predecessor
/// chain back to its source.
LossValue intrinsic_loss(const TriMesh& real, std::span<const Vec3> generated, const AdjacencyIndex& adj,
                         const RegionSet& regions, bool want_gradient);

TriMesh laplacian_smooth(const TriMesh& mesh, const AdjacencyIndex& adj, const SmoothingParams& params);

}  // namespace geokernel::reference
