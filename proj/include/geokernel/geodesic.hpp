#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "geokernel/mesh.hpp"

namespace geokernel {

/// Largest vertex count accepted by the quadratic-memory all-pairs routines.
inline constexpr std::size_t kAllPairsVertexLimit = 10'000;

/// Shortest-path tree rooted at one source, restricted to the vertices that
/// were settled. Entries are stored in settle order, so every parent slot is
/// smaller than its child's slot and slot 0 is the source.
struct ShortestPathTree {
  VertexId source = 0;
  std::vector<VertexId> vertices;
  std::vector<std::int32_t> parent_slot;  // -1 for the root
  std::vector<double> distances;

  std::optional<std::size_t> slot_of(VertexId v) const;
  /// Vertex sequence source -> target. Throws when target is not in the tree.
  std::vector<VertexId> path_to(VertexId target) const;
};

/// Pairwise graph-geodesic distances over a vertex subset. Row a holds
/// distances measured from subset[a]; `trees[a]` is the shortest-path tree
/// from subset[a], grown until every subset member was reached.
struct GeodesicMatrix {
  std::vector<VertexId> subset;
  std::vector<double> distances;  // row-major, size() x size()
  std::vector<ShortestPathTree> trees;

  std::size_t size() const noexcept { return subset.size(); }
  double at(std::size_t a, std::size_t b) const { return distances[a * subset.size() + b]; }
};

struct SingleSourceResult {
  std::vector<double> distances;
  std::vector<VertexId> predecessors;  // predecessors[source] == source
};

/// Dijkstra over the whole edge graph. Every vertex must be reachable;
/// otherwise DisconnectedMeshError names one unreachable vertex.
SingleSourceResult single_source_geodesic(const TriMesh& mesh, const AdjacencyIndex& adj, std::size_t source);

/// One Dijkstra per subset member, run in parallel. Each run stops once all
/// subset members are settled.
GeodesicMatrix pairwise_geodesic(const TriMesh& mesh, const AdjacencyIndex& adj, std::span<const VertexId> subset);

/// Dense V x V distance matrix.
struct DistanceMatrix {
  std::size_t n = 0;
  std::vector<double> values;
  double at(std::size_t i, std::size_t j) const { return values[i * n + j]; }
};

/// Floyd-Warshall over the same edge graph. Paths are discovered by the
/// triple loop; each entry is then re-accumulated edge by edge from the row
/// vertex outward so its rounding matches a single-source sweep. Unreachable
/// pairs are +inf. Guarded by kAllPairsVertexLimit.
DistanceMatrix all_pairs_oracle(const TriMesh& mesh, const AdjacencyIndex& adj);

/// Length of the polyline through `path`, summed from the front.
double path_length(const AdjacencyIndex& adj, std::span<const VertexId> path);

}  // namespace geokernel
