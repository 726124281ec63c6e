#pragma once

#include <cstddef>
#include <cstdint>

#include "geokernel/mesh.hpp"

namespace geokernel::synthetic {

/// Regular tetrahedron with the given edge length.
TriMesh tetrahedron(double edge = 1.0);

/// Triangulated equilateral lattice, rows x cols vertices, unit spacing.
/// Interior vertices have six neighbors at distance `spacing`.
TriMesh triangular_grid(std::size_t rows, std::size_t cols, double spacing = 1.0);

/// Strip of 2 * (n - 1) triangles over 2n vertices laid out as a ladder.
TriMesh triangle_strip(std::size_t n);

/// Latitude/longitude sphere with rings * segments + 2 vertices.
TriMesh uv_sphere(std::size_t rings, std::size_t segments, double radius = 1.0);

/// Closed bumpy ellipsoid with `rings * segments + 2` vertices, proportioned
/// roughly like a standing body (meters). 82 x 84 gives 6,890 vertices.
TriMesh body_proxy(std::size_t rings = 82, std::size_t segments = 84);

/// Adds isotropic Gaussian noise of standard deviation `sigma` to every
/// vertex coordinate.
TriMesh jitter(const TriMesh& mesh, double sigma, std::uint64_t rng_seed);

/// Mean edge length over unique edges.
double mean_edge_length(const TriMesh& mesh);

}  // namespace geokernel::synthetic
