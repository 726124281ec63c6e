#pragma once

#include <filesystem>
#include <span>

#include "geokernel/mesh.hpp"

namespace geokernel {

/// Reads a Wavefront OBJ file (`v` and `f` records, 1-based or negative
/// relative indices). Texture/normal references in faces and every other
/// record type are ignored. Polygons with more than three corners are
/// rejected rather than triangulated.
TriMesh load_mesh(const std::filesystem::path& path);

/// Writes `v` and `f` records with shortest round-trip float formatting.
void save_mesh(const TriMesh& mesh, const std::filesystem::path& path);

/// Writes a point cloud as an OBJ file containing only `v` records.
void save_points(std::span<const Vec3> points, const std::filesystem::path& path);

}  // namespace geokernel
