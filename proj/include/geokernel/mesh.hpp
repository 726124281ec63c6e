#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "geokernel/vec3.hpp"

namespace geokernel {

using VertexId = std::uint32_t;
using Face = std::array<VertexId, 3>;

/// Indexed triangle mesh. Faces are counter-clockwise index triplets.
struct TriMesh {
  std::vector<Vec3> vertices;
  std::vector<Face> faces;
  std::string name;

  std::size_t vertex_count() const noexcept { return vertices.size(); }
  std::size_t face_count() const noexcept { return faces.size(); }
};

/// Checks index ranges and rejects degenerate faces. Throws geokernel::Error.
void validate(const TriMesh& mesh);

/// validate() plus V >= 3 and F >= 1, the minimum for geodesic and loss work.
void validate_surface(const TriMesh& mesh);

/// True when both meshes have the same vertex count and identical faces.
bool same_topology(const TriMesh& a, const TriMesh& b) noexcept;

double surface_area(const TriMesh& mesh);

/// One-ring vertex graph in compressed-row form with per-edge Euclidean lengths.
///
/// Each vertex's ring is sorted ascending. Edge (i, j) appears once in ring(i)
/// and once in ring(j), with bitwise identical lengths. Non-manifold edges are
/// fine: the index is a pure vertex graph.
class AdjacencyIndex {
 public:
  AdjacencyIndex() = default;

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  /// Number of undirected edges.
  std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }

  /// Unchecked ring access; see one_ring() for the bounds-checked form.
  std::span<const VertexId> ring(VertexId v) const noexcept {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::span<const double> ring_lengths(VertexId v) const noexcept {
    return {lengths_.data() + offsets_[v], lengths_.data() + offsets_[v + 1]};
  }

  /// Same graph, edge lengths recomputed from `positions` (one per vertex).
  AdjacencyIndex with_positions(std::span<const Vec3> positions) const;

  friend AdjacencyIndex build_adjacency(const TriMesh& mesh);

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> neighbors_;
  std::vector<double> lengths_;
};

AdjacencyIndex build_adjacency(const TriMesh& mesh);

/// Sorted neighbors of `j`. Throws geokernel::Error when j is out of range.
std::span<const VertexId> one_ring(const AdjacencyIndex& adj, std::size_t j);

/// Connected-component label per vertex, labels numbered from 0 in order of
/// the lowest vertex index in each component.
std::vector<std::uint32_t> connected_components(const AdjacencyIndex& adj);

}  // namespace geokernel
