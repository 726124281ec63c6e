#include "geokernel/mesh.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "geokernel/error.hpp"

namespace geokernel {

void validate(const TriMesh& mesh) {
  const std::size_t v = mesh.vertex_count();
  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    const Face& face = mesh.faces[f];
    for (VertexId idx : face) {
      if (idx >= v) {
        throw Error("face " + std::to_string(f) + " references vertex " + std::to_string(idx) +
                    " but the mesh has " + std::to_string(v) + " vertices");
      }
    }
    if (face[0] == face[1] || face[1] == face[2] || face[0] == face[2]) {
      throw Error("face " + std::to_string(f) + " is degenerate (repeated vertex index)");
    }
  }
}

void validate_surface(const TriMesh& mesh) {
  validate(mesh);
  if (mesh.vertex_count() < 3) {
    throw Error("mesh needs at least 3 vertices, got " + std::to_string(mesh.vertex_count()));
  }
  if (mesh.face_count() < 1) {
    throw Error("mesh has no faces");
  }
}

bool same_topology(const TriMesh& a, const TriMesh& b) noexcept {
  return a.vertex_count() == b.vertex_count() && a.faces == b.faces;
}

double surface_area(const TriMesh& mesh) {
  double area = 0.0;
  for (const Face& f : mesh.faces) {
    const Vec3& a = mesh.vertices[f[0]];
    area += 0.5 * norm(cross(mesh.vertices[f[1]] - a, mesh.vertices[f[2]] - a));
  }
  return area;
}

AdjacencyIndex build_adjacency(const TriMesh& mesh) {
  validate(mesh);
  const std::size_t v = mesh.vertex_count();

  std::vector<std::pair<VertexId, VertexId>> directed;
  directed.reserve(mesh.faces.size() * 6);
  for (const Face& f : mesh.faces) {
    for (int e = 0; e < 3; ++e) {
      const VertexId a = f[e];
      const VertexId b = f[(e + 1) % 3];
      directed.emplace_back(a, b);
      directed.emplace_back(b, a);
    }
  }
  std::sort(directed.begin(), directed.end());
  directed.erase(std::unique(directed.begin(), directed.end()), directed.end());

  AdjacencyIndex adj;
  adj.offsets_.assign(v + 1, 0);
  for (const auto& [a, b] : directed) {
    ++adj.offsets_[a + 1];
  }
  for (std::size_t i = 0; i < v; ++i) {
    adj.offsets_[i + 1] += adj.offsets_[i];
  }
  adj.neighbors_.resize(directed.size());
  for (std::size_t i = 0; i < directed.size(); ++i) {
    adj.neighbors_[i] = directed[i].second;
  }
  return adj.with_positions(mesh.vertices);
}

AdjacencyIndex AdjacencyIndex::with_positions(std::span<const Vec3> positions) const {
  if (positions.size() != vertex_count()) {
    throw Error("position count " + std::to_string(positions.size()) +
                " does not match adjacency vertex count " + std::to_string(vertex_count()));
  }
  AdjacencyIndex out;
  out.offsets_ = offsets_;
  out.neighbors_ = neighbors_;
  out.lengths_.resize(neighbors_.size());
  const std::size_t v = vertex_count();
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t e = offsets_[i]; e < offsets_[i + 1]; ++e) {
      out.lengths_[e] = distance(positions[i], positions[neighbors_[e]]);
    }
  }
  return out;
}

std::span<const VertexId> one_ring(const AdjacencyIndex& adj, std::size_t j) {
  if (j >= adj.vertex_count()) {
    throw Error("vertex index " + std::to_string(j) + " out of range [0, " +
                std::to_string(adj.vertex_count()) + ")");
  }
  return adj.ring(static_cast<VertexId>(j));
}

std::vector<std::uint32_t> connected_components(const AdjacencyIndex& adj) {
  constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
  const std::size_t v = adj.vertex_count();
  std::vector<std::uint32_t> label(v, unset);
  std::vector<VertexId> stack;
  std::uint32_t next = 0;
  for (std::size_t s = 0; s < v; ++s) {
    if (label[s] != unset) continue;
    label[s] = next;
    stack.push_back(static_cast<VertexId>(s));
    while (!stack.empty()) {
      const VertexId u = stack.back();
      stack.pop_back();
      for (VertexId w : adj.ring(u)) {
        if (label[w] == unset) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

}  // namespace geokernel
