// geokernel-mkmesh: writes the synthetic fixture meshes as OBJ.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "geokernel/obj_io.hpp"
#include "geokernel/synthetic.hpp"

using namespace geokernel;

int main(int argc, char** argv) {
  CLI::App app{"Write a synthetic fixture mesh"};
  std::string kind = "body";
  std::string out;
  std::size_t rows = 82, cols = 84;
  double size = 1.0;
  double jitter = 0.0;
  std::uint64_t seed = 0;
  app.add_option("kind", kind, "body | sphere | grid | tetra | strip")
      ->check(CLI::IsMember({"body", "sphere", "grid", "tetra", "strip"}));
  app.add_option("--out", out, "Output OBJ path")->required();
  app.add_option("--rows", rows, "Rings (body, sphere), rows (grid) or ladder length (strip)");
  app.add_option("--cols", cols, "Segments (body, sphere) or columns (grid)");
  app.add_option("--size", size, "Radius, spacing or edge length");
  app.add_option("--jitter", jitter, "Gaussian vertex noise, in mean edge lengths");
  app.add_option("--seed", seed, "Noise seed");
  CLI11_PARSE(app, argc, argv);

  try {
    TriMesh mesh;
    if (kind == "body") mesh = synthetic::body_proxy(rows, cols);
    else if (kind == "sphere") mesh = synthetic::uv_sphere(rows, cols, size);
    else if (kind == "grid") mesh = synthetic::triangular_grid(rows, cols, size);
    else if (kind == "tetra") mesh = synthetic::tetrahedron(size);
    else mesh = synthetic::triangle_strip(rows);
    if (jitter > 0.0) mesh = synthetic::jitter(mesh, jitter * synthetic::mean_edge_length(mesh), seed);
    save_mesh(mesh, out);
    std::cout << out << ": " << mesh.vertex_count() << " vertices, " << mesh.face_count() << " faces\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
