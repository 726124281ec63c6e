#include "fixtures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <sys/wait.h>

#include "geokernel/synthetic.hpp"

namespace geokernel::testing {

TriMesh random_grid_mesh(Rng& rng, std::size_t rows, std::size_t cols) {
  std::uniform_real_distribution<double> jitter(-0.3, 0.3);
  std::uniform_real_distribution<double> height(-0.5, 0.5);
  std::bernoulli_distribution flip(0.5);
  TriMesh mesh;
  mesh.name = "random_grid";
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      mesh.vertices.push_back({static_cast<double>(j) + jitter(rng), static_cast<double>(i) + jitter(rng), height(rng)});
    }
  }
  auto id = [cols](std::size_t i, std::size_t j) { return static_cast<VertexId>(i * cols + j); };
  for (std::size_t i = 0; i + 1 < rows; ++i) {
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      const VertexId a = id(i, j), b = id(i, j + 1), c = id(i + 1, j + 1), d = id(i + 1, j);
      if (flip(rng)) {
        mesh.faces.push_back({a, b, c});
        mesh.faces.push_back({a, c, d});
      } else {
        mesh.faces.push_back({a, b, d});
        mesh.faces.push_back({b, c, d});
      }
    }
  }
  return mesh;
}

TriMesh random_connected_mesh(Rng& rng, std::size_t min_v, std::size_t max_v) {
  std::uniform_int_distribution<std::size_t> pick_v(min_v, max_v);
  const std::size_t target = pick_v(rng);
  if (std::bernoulli_distribution(0.3)(rng) && target >= 11) {
    // rings * segments + 2 <= target, segments in [3, 12]
    std::uniform_int_distribution<std::size_t> pick_seg(3, 12);
    const std::size_t segments = std::min(pick_seg(rng), target - 2);
    const std::size_t rings = std::max<std::size_t>(1, (target - 2) / segments);
    TriMesh sphere = synthetic::uv_sphere(rings, segments, 1.0);
    return synthetic::jitter(sphere, 0.05, rng());
  }
  std::uniform_int_distribution<std::size_t> pick_rows(2, std::max<std::size_t>(2, target / 2));
  const std::size_t rows = pick_rows(rng);
  const std::size_t cols = std::max<std::size_t>(2, target / rows);
  return random_grid_mesh(rng, rows, cols);
}

TriMesh two_triangles() {
  TriMesh m;
  m.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {5, 0, 0}, {6, 0, 0}, {5, 1, 0}};
  m.faces = {{0, 1, 2}, {3, 4, 5}};
  return m;
}

TriMesh unit_chain(std::size_t n) {
  TriMesh m;
  for (std::size_t i = 0; i < n; ++i) m.vertices.push_back({static_cast<double>(i), 0.0, 0.0});
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto apex = static_cast<VertexId>(m.vertices.size());
    m.vertices.push_back({static_cast<double>(i) + 0.5, 0.0, 1000.0});
    m.faces.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1), apex});
  }
  return m;
}

Vec3 RigidMotion::apply(const Vec3& p) const {
  return {r[0][0] * p.x + r[0][1] * p.y + r[0][2] * p.z + t.x,
          r[1][0] * p.x + r[1][1] * p.y + r[1][2] * p.z + t.y,
          r[2][0] * p.x + r[2][1] * p.y + r[2][2] * p.z + t.z};
}

RigidMotion random_rigid_motion(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  double q[4] = {n(rng), n(rng), n(rng), n(rng)};
  const double len = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
  for (double& x : q) x /= len;
  const double w = q[0], x = q[1], y = q[2], z = q[3];
  RigidMotion m{{{1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w)},
                 {2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w)},
                 {2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y)}},
                {n(rng), n(rng), n(rng)}};
  return m;
}

std::vector<Vec3> transform_points(const RigidMotion& m, const std::vector<Vec3>& points) {
  std::vector<Vec3> out;
  out.reserve(points.size());
  for (const Vec3& p : points) out.push_back(m.apply(p));
  return out;
}

std::vector<Vec3> perturb(Rng& rng, const std::vector<Vec3>& points, double sigma) {
  std::normal_distribution<double> n(0.0, sigma);
  std::vector<Vec3> out = points;
  for (Vec3& p : out) p = p + Vec3{n(rng), n(rng), n(rng)};
  return out;
}

TempDir::TempDir(const std::string& tag) {
  std::random_device rd;
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::filesystem::path p =
        std::filesystem::temp_directory_path() / ("geokernel-" + tag + "-" + std::to_string(rd()));
    if (std::filesystem::create_directory(p)) {
      path_ = p;
      return;
    }
  }
  throw std::runtime_error("could not create a temp directory");
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

int run_command(const std::string& command, std::string* out) {
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + command);
  std::array<char, 4096> buf{};
  std::string captured;
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) captured.append(buf.data(), n);
  const int status = pclose(pipe);
  if (out) *out = std::move(captured);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace geokernel::testing
