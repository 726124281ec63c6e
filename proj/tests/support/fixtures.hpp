#pragma once

// Hand-rolled generators for property tests. Every generator is a pure
// function of its seed.

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "geokernel/mesh.hpp"

namespace geokernel::testing {

using Rng = std::mt19937_64;

/// Connected rows x cols grid, each quad split along a random diagonal,
/// positions jittered in the plane and in z. At most 200 vertices when
/// rows * cols <= 200.
TriMesh random_grid_mesh(Rng& rng, std::size_t rows, std::size_t cols);

/// Random connected mesh with V drawn from [min_v, max_v]: either a random
/// grid or a jittered closed sphere.
TriMesh random_connected_mesh(Rng& rng, std::size_t min_v, std::size_t max_v);

/// Two triangles sharing no vertex.
TriMesh two_triangles();

/// Path graph 0-1-...-(n-1) along x with unit spacing, realized as a
/// degenerate-free triangle fan: every consecutive pair shares an edge, and
/// each extra apex vertex sits far above so it never shortens a path.
TriMesh unit_chain(std::size_t n);

struct RigidMotion {
  double r[3][3];
  Vec3 t;

  Vec3 apply(const Vec3& p) const;
};

RigidMotion random_rigid_motion(Rng& rng);
std::vector<Vec3> transform_points(const RigidMotion& m, const std::vector<Vec3>& points);

std::vector<Vec3> perturb(Rng& rng, const std::vector<Vec3>& points, double sigma);

/// A fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag);
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const noexcept { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

/// Runs a shell command, capturing stdout. Returns the exit status.
int run_command(const std::string& command, std::string* out = nullptr);

std::string read_file(const std::filesystem::path& path);

}  // namespace geokernel::testing
