#include "geokernel/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "geokernel/error.hpp"

namespace geokernel::synthetic {

TriMesh tetrahedron(double edge) {
  // Alternate corners of a cube with side edge / sqrt(2).
  const double h = edge / (2.0 * std::numbers::sqrt2);
  TriMesh m;
  m.name = "tetrahedron";
  m.vertices = {{h, h, h}, {h, -h, -h}, {-h, h, -h}, {-h, -h, h}};
  m.faces = {{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}};
  return m;
}

TriMesh triangular_grid(std::size_t rows, std::size_t cols, double spacing) {
  if (rows < 2 || cols < 2) throw Error("triangular grid needs at least 2 x 2 vertices");
  TriMesh m;
  m.name = "triangular_grid";
  const double row_height = spacing * std::sqrt(3.0) / 2.0;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      m.vertices.push_back({spacing * (static_cast<double>(j) + 0.5 * static_cast<double>(i)),
                            row_height * static_cast<double>(i), 0.0});
    }
  }
  auto id = [cols](std::size_t i, std::size_t j) { return static_cast<VertexId>(i * cols + j); };
  for (std::size_t i = 0; i + 1 < rows; ++i) {
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      m.faces.push_back({id(i, j), id(i, j + 1), id(i + 1, j)});
      m.faces.push_back({id(i, j + 1), id(i + 1, j + 1), id(i + 1, j)});
    }
  }
  return m;
}

TriMesh triangle_strip(std::size_t n) {
  if (n < 2) throw Error("triangle strip needs n >= 2");
  TriMesh m;
  m.name = "strip";
  for (std::size_t i = 0; i < n; ++i) {
    m.vertices.push_back({static_cast<double>(i), 0.0, 0.0});
    m.vertices.push_back({static_cast<double>(i), 1.0, 0.0});
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto a = static_cast<VertexId>(2 * i);
    m.faces.push_back({a, static_cast<VertexId>(a + 2), static_cast<VertexId>(a + 1)});
    m.faces.push_back({static_cast<VertexId>(a + 1), static_cast<VertexId>(a + 2), static_cast<VertexId>(a + 3)});
  }
  return m;
}

TriMesh uv_sphere(std::size_t rings, std::size_t segments, double radius) {
  if (rings < 1 || segments < 3) throw Error("uv sphere needs rings >= 1 and segments >= 3");
  TriMesh m;
  m.name = "uv_sphere";
  m.vertices.push_back({0.0, 0.0, radius});
  for (std::size_t r = 0; r < rings; ++r) {
    const double theta = std::numbers::pi * static_cast<double>(r + 1) / static_cast<double>(rings + 1);
    for (std::size_t s = 0; s < segments; ++s) {
      const double phi = 2.0 * std::numbers::pi * static_cast<double>(s) / static_cast<double>(segments);
      m.vertices.push_back(
          {radius * std::sin(theta) * std::cos(phi), radius * std::sin(theta) * std::sin(phi), radius * std::cos(theta)});
    }
  }
  m.vertices.push_back({0.0, 0.0, -radius});
  const auto south = static_cast<VertexId>(m.vertices.size() - 1);
  auto id = [segments](std::size_t r, std::size_t s) { return static_cast<VertexId>(1 + r * segments + s % segments); };
  for (std::size_t s = 0; s < segments; ++s) m.faces.push_back({0, id(0, s), id(0, s + 1)});
  for (std::size_t r = 0; r + 1 < rings; ++r) {
    for (std::size_t s = 0; s < segments; ++s) {
      m.faces.push_back({id(r, s), id(r + 1, s), id(r + 1, s + 1)});
      m.faces.push_back({id(r, s), id(r + 1, s + 1), id(r, s + 1)});
    }
  }
  for (std::size_t s = 0; s < segments; ++s) m.faces.push_back({id(rings - 1, s), south, id(rings - 1, s + 1)});
  return m;
}

TriMesh body_proxy(std::size_t rings, std::size_t segments) {
  TriMesh m = uv_sphere(rings, segments, 1.0);
  m.name = "body_proxy";
  for (Vec3& p : m.vertices) {
    const double theta = std::acos(std::clamp(p.z, -1.0, 1.0));
    const double phi = std::atan2(p.y, p.x);
    const double bump = 1.0 + 0.08 * std::sin(5.0 * theta) * std::cos(3.0 * phi) +
                        0.04 * std::cos(9.0 * theta + 1.3) * std::sin(7.0 * phi);
    p = {0.18 * bump * p.x, 0.12 * bump * p.y, 0.85 * bump * p.z};
  }
  return m;
}

TriMesh jitter(const TriMesh& mesh, double sigma, std::uint64_t rng_seed) {
  TriMesh out = mesh;
  std::mt19937_64 rng(rng_seed);
  std::normal_distribution<double> noise(0.0, sigma);
  for (Vec3& p : out.vertices) {
    p.x += noise(rng);
    p.y += noise(rng);
    p.z += noise(rng);
  }
  return out;
}

double mean_edge_length(const TriMesh& mesh) {
  const AdjacencyIndex adj = build_adjacency(mesh);
  double sum = 0.0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < adj.vertex_count(); ++i) {
    const auto ring = adj.ring(static_cast<VertexId>(i));
    const auto len = adj.ring_lengths(static_cast<VertexId>(i));
    for (std::size_t e = 0; e < ring.size(); ++e) {
      if (ring[e] > i) {
        sum += len[e];
        ++n;
      }
    }
  }
  return n ? sum / static_cast<double>(n) : 0.0;
}

}  // namespace geokernel::synthetic
