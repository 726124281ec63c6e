#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "geokernel/geodesic.hpp"
#include "geokernel/mesh.hpp"
#include "geokernel/sampling.hpp"

namespace geokernel {

enum class GeodesicSource { real, generated };

std::string_view to_string(GeodesicSource s) noexcept;

struct RegionalGeodesicSet {
  std::vector<GeodesicMatrix> region_matrices;
  GeodesicSource source_tag = GeodesicSource::real;
};

struct RegionLoss {
  VertexId seed = 0;
  double value = 0.0;  // mean over this region's pairs
  std::size_t pair_count = 0;
};

/// Mean squared geodesic discrepancy over vertex pairs, with an optional
/// gradient with respect to the generated vertex positions.
struct LossValue {
  double value = 0.0;
  std::size_t pair_count = 0;
  std::vector<Vec3> gradient;  // empty unless requested
  std::vector<RegionLoss> per_region;

  double gradient_norm() const;
};

RegionalGeodesicSet regional_geodesic(const TriMesh& mesh, const AdjacencyIndex& adj, const RegionSet& regions,
                                      GeodesicSource tag = GeodesicSource::real);

/// value = (1/P) sum over regions, sum over pairs i<j in the region, of
/// (d_real(i,j) - d_gen(i,j))^2, with P the total pair count. Both distances
/// are measured from the lower-slot vertex of the pair. Regions index the
/// real mesh and are reused on the generated positions (shared topology).
///
/// The gradient holds every generated shortest path fixed and
/// differentiates its summed edge lengths. Contributions are accumulated in
/// a fixed order, so results are bitwise reproducible regardless of thread
/// count.
LossValue intrinsic_loss(const TriMesh& real, std::span<const Vec3> generated, const AdjacencyIndex& adj,
                         const RegionSet& regions, bool want_gradient);

/// Same formula over all V(V-1)/2 vertex pairs. Streams one source at a time,
/// so memory stays O(V) per worker; guarded by kAllPairsVertexLimit.
LossValue global_intrinsic_loss(const TriMesh& real, std::span<const Vec3> generated, const AdjacencyIndex& adj,
                                bool want_gradient = false);

}  // namespace geokernel
