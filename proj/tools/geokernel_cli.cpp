// geokernel: command-line front end for the geometry kernel.
//
// Every subcommand prints one JSON document ("schema": 1) to stdout, or to
// --out when given. Meshes and point clouds are written as OBJ. Errors print
// a single "error: ..." line to stderr and exit with status 1.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "geokernel/bench.hpp"
#include "geokernel/error.hpp"
#include "geokernel/geodesic.hpp"
#include "geokernel/intrinsic.hpp"
#include "geokernel/json_io.hpp"
#include "geokernel/laplacian.hpp"
#include "geokernel/metrics.hpp"
#include "geokernel/obj_io.hpp"
#include "geokernel/parallel.hpp"
#include "geokernel/sampling.hpp"

namespace fs = std::filesystem;
using namespace geokernel;

namespace {

struct SamplingFlags {
  std::size_t regions = 4;
  std::size_t k = 300;
  std::size_t separation = 2;
  std::string sampling = "adaptive";
  std::string state_path;

  void add(CLI::App* cmd) {
    cmd->add_option("--regions", regions, "Region count N")->check(CLI::PositiveNumber);
    cmd->add_option("--k", k, "Vertices per region")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 31));
    cmd->add_option("--separation", separation, "Minimum seed separation in hops");
    cmd->add_option("--sampling", sampling, "Seed strategy")->check(CLI::IsMember({"adaptive", "random"}));
    cmd->add_option("--state", state_path, "JSON traversal state (or a previous regions/intrinsic-loss output)");
  }

  SamplingConfig config(std::size_t vertex_count) const {
    SamplingConfig cfg{regions, k, separation};
    if (cfg.region_size > vertex_count) {
      std::cerr << "warning: region size k=" << cfg.region_size << " clamped to V=" << vertex_count << "\n";
      cfg.region_size = vertex_count;
    }
    return cfg;
  }

  TraversalState load_state() const {
    if (state_path.empty()) return {};
    std::ifstream in(state_path);
    if (!in) throw Error("cannot open state file '" + state_path + "'");
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw Error("state file '" + state_path + "' is not valid JSON: " + e.what());
    }
    return traversal_state_from_json(j.is_object() ? j.at("state") : j);
  }

  RegionSet sample(const TriMesh& mesh, const AdjacencyIndex& adj, std::uint64_t seed) const {
    const SamplingConfig cfg = config(mesh.vertex_count());
    if (sampling == "random") return sample_random_regions(mesh, adj, cfg, seed);
    return sample_regions(mesh, adj, cfg, load_state());
  }
};

Json header(const std::string& command) { return Json{{"schema", kJsonSchemaVersion}, {"command", command}}; }

class Output {
 public:
  explicit Output(const std::string& path) : path_(path) {}

  void emit(const Json& doc) const {
    const std::string text = doc.dump(2) + "\n";
    if (path_.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path_, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open '" + path_ + "' for writing");
    out << text;
  }

 private:
  const std::string& path_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geodesic and Laplacian preservation kernels for mesh pose transfer"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<int> threads;
  std::string out_path;
  std::uint64_t seed = 0;
  app.add_option("--threads", threads, "Worker thread cap (falls back to GEOKERNEL_THREADS)")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "Write the JSON document here instead of stdout");
  app.add_option("--seed", seed, "Seed for every randomized step");

  std::string mesh_path, real_path, gen_path;
  SamplingFlags sampling;
  std::function<Json()> action;

  // geodesic
  auto* geo = app.add_subcommand("geodesic", "Graph-geodesic distances from a source or over a subset");
  std::optional<std::size_t> source;
  std::vector<VertexId> subset;
  geo->add_option("--mesh", mesh_path, "Input OBJ")->required();
  auto* source_opt = geo->add_option("--source", source, "Single source vertex");
  geo->add_option("--subset", subset, "Vertex subset for a pairwise matrix")->delimiter(',')->excludes(source_opt);
  geo->callback([&] {
    action = [&] {
      const TriMesh mesh = load_mesh(mesh_path);
      const AdjacencyIndex adj = build_adjacency(mesh);
      Json doc = header("geodesic");
      doc["vertex_count"] = mesh.vertex_count();
      if (!subset.empty()) {
        doc["matrix"] = to_json(pairwise_geodesic(mesh, adj, subset));
      } else {
        const std::size_t s = source.value_or(0);
        const SingleSourceResult r = single_source_geodesic(mesh, adj, s);
        doc["source"] = s;
        doc["distances"] = r.distances;
        doc["predecessors"] = r.predecessors;
      }
      return doc;
    };
  });

  // regions
  auto* reg = app.add_subcommand("regions", "Select seeds and extract geodesic sub-regions");
  reg->add_option("--mesh", mesh_path, "Input OBJ")->required();
  sampling.add(reg);
  reg->callback([&] {
    action = [&] {
      const TriMesh mesh = load_mesh(mesh_path);
      const AdjacencyIndex adj = build_adjacency(mesh);
      const RegionSet regions = sampling.sample(mesh, adj, seed);
      Json doc = header("regions");
      doc["sampling"] = sampling.sampling;
      doc.update(to_json(regions));
      doc["pair_count"] = regions.pair_count();
      return doc;
    };
  });

  // intrinsic-loss
  auto* il = app.add_subcommand("intrinsic-loss", "Regional (or global) geodesic preservation loss");
  bool global = false;
  bool emit_gradient = false;
  std::string score_on = "real";
  il->add_option("--real", real_path, "Reference (shape source) OBJ")->required();
  il->add_option("--gen", gen_path, "Generated OBJ sharing the reference topology")->required();
  sampling.add(il);
  il->add_flag("--global", global, "Use every vertex pair instead of sampled regions");
  il->add_flag("--emit-gradient", emit_gradient, "Include the full V x 3 gradient");
  il->add_option("--score-on", score_on, "Mesh used for distortion ranking")->check(CLI::IsMember({"real", "gen"}));
  il->callback([&] {
    action = [&] {
      const TriMesh real = load_mesh(real_path);
      const TriMesh gen = load_mesh(gen_path);
      if (!same_topology(real, gen)) throw Error("--real and --gen meshes differ in topology");
      const AdjacencyIndex adj = build_adjacency(real);
      Json doc = header("intrinsic-loss");
      if (global) {
        doc["mode"] = "global";
        doc.update(to_json(global_intrinsic_loss(real, gen.vertices, adj, true), emit_gradient));
        return doc;
      }
      const RegionSet regions = score_on == "gen" ? sampling.sample(gen, build_adjacency(gen), seed)
                                                  : sampling.sample(real, adj, seed);
      doc["mode"] = "regional";
      doc["sampling"] = sampling.sampling;
      doc.update(to_json(intrinsic_loss(real, gen.vertices, adj, regions, true), emit_gradient));
      doc["seeds"] = regions.seeds;
      doc["state"] = to_json(regions.traversal_state);
      return doc;
    };
  });

  // smooth
  auto* sm = app.add_subcommand("smooth", "Iterated uniform Laplacian smoothing");
  SmoothingParams smoothing{10, 0.5};
  std::string mesh_out;
  sm->add_option("--mesh", mesh_path, "Input OBJ")->required();
  sm->add_option("--iterations", smoothing.iterations, "Iteration count");
  sm->add_option("--lambda", smoothing.step, "Step size in (0, 1]");
  sm->add_option("--mesh-out", mesh_out, "Write the smoothed mesh as OBJ");
  sm->callback([&] {
    action = [&] {
      const TriMesh mesh = load_mesh(mesh_path);
      const AdjacencyIndex adj = build_adjacency(mesh);
      const TriMesh smoothed = laplacian_smooth(mesh, adj, smoothing);
      if (!mesh_out.empty()) save_mesh(smoothed, mesh_out);
      Json doc = header("smooth");
      doc["iterations"] = smoothing.iterations;
      doc["lambda"] = smoothing.step;
      doc["vertex_count"] = mesh.vertex_count();
      doc["membrane_energy_before"] = membrane_energy(adj, mesh.vertices);
      doc["membrane_energy_after"] = membrane_energy(adj, smoothed.vertices);
      if (!mesh_out.empty()) doc["mesh_out"] = mesh_out;
      return doc;
    };
  });

  // lap-group
  auto* lg = app.add_subcommand("lap-group", "Random Laplacian group, each member Poisson-disk downsampled");
  std::size_t group_size = kDefaultGroupSize;
  std::size_t target_points = kDefaultTargetPoints;
  std::string out_dir;
  lg->add_option("--mesh", mesh_path, "Input OBJ")->required();
  lg->add_option("--group-size", group_size, "Members in the group")->check(CLI::PositiveNumber);
  lg->add_option("--target-points", target_points, "Points per member")->check(CLI::PositiveNumber);
  lg->add_option("--out-dir", out_dir, "Directory for member_<i>.obj point clouds and manifest.json");
  lg->callback([&] {
    action = [&] {
      const TriMesh mesh = load_mesh(mesh_path);
      const AdjacencyIndex adj = build_adjacency(mesh);
      const LaplacianStack stack = laplacian_group(mesh, adj, group_size, target_points, seed);
      Json doc = header("lap-group");
      doc.update(manifest_json(stack));
      Json members = Json::array();
      for (std::size_t i = 0; i < stack.members.size(); ++i) {
        Json m{{"iterations", stack.members[i].iterations}, {"indices", stack.members[i].sample.indices}};
        if (!out_dir.empty()) {
          const std::string file = "member_" + std::to_string(i) + ".obj";
          fs::create_directories(out_dir);
          save_points(stack.members[i].sample.points, fs::path(out_dir) / file);
          m["file"] = file;
        }
        members.push_back(std::move(m));
      }
      doc["members"] = std::move(members);
      if (!out_dir.empty()) {
        std::ofstream manifest(fs::path(out_dir) / "manifest.json", std::ios::binary | std::ios::trunc);
        if (!manifest) throw Error("cannot write manifest in '" + out_dir + "'");
        manifest << doc.dump(2) << "\n";
      }
      return doc;
    };
  });

  // downsample
  auto* ds = app.add_subcommand("downsample", "Poisson-disk (sample elimination) vertex downsampling");
  std::string points_out;
  ds->add_option("--mesh", mesh_path, "Input OBJ")->required();
  ds->add_option("--target-points", target_points, "Points to keep")->check(CLI::PositiveNumber);
  ds->add_option("--points-out", points_out, "Write the kept points as an OBJ point cloud");
  ds->callback([&] {
    action = [&] {
      const TriMesh mesh = load_mesh(mesh_path);
      const PointSample sample = poisson_disk_downsample(mesh, target_points, seed);
      if (!points_out.empty()) save_points(sample.points, points_out);
      Json doc = header("downsample");
      doc["seed"] = seed;
      doc["target_points"] = target_points;
      doc["indices"] = sample.indices;
      return doc;
    };
  });

  // metrics
  auto* mt = app.add_subcommand("metrics", "Interpolation and disentanglement errors between two meshes");
  std::size_t pairs = kDefaultMetricPairs;
  std::string mode = "relative";
  mt->add_option("--real", real_path, "First OBJ")->required();
  mt->add_option("--gen", gen_path, "Second OBJ, same topology")->required();
  mt->add_option("--pairs", pairs, "Sampled vertex pairs")->check(CLI::PositiveNumber);
  mt->add_option("--mode", mode, "Interpolation error normalization")
      ->check(CLI::IsMember({"relative", "absolute"}));
  mt->callback([&] {
    action = [&] {
      const TriMesh a = load_mesh(real_path);
      const TriMesh b = load_mesh(gen_path);
      const auto dm = mode == "absolute" ? DistortionMode::absolute : DistortionMode::relative;
      Json doc = header("metrics");
      doc["interpolation_error"] = to_json(interpolation_error(a, b, pairs, seed, dm));
      doc["disentanglement_error"] = to_json(disentanglement_error(a, b));
      return doc;
    };
  });

  // bench
  auto* bn = app.add_subcommand("bench", "Time global vs regional intrinsic loss");
  BenchConfig bench_cfg;
  bool no_gradient = false;
  bn->add_option("--mesh", mesh_path, "Input OBJ")->required();
  bn->add_option("--regions", bench_cfg.sampling.region_count, "Region count N")->check(CLI::PositiveNumber);
  bn->add_option("--k", bench_cfg.sampling.region_size, "Vertices per region");
  bn->add_option("--separation", bench_cfg.sampling.min_seed_separation, "Minimum seed separation in hops");
  bn->add_option("--reps", bench_cfg.repetitions, "Repetitions per method (median reported)")
      ->check(CLI::Range(std::size_t{3}, std::size_t{1000}));
  bn->add_option("--noise", bench_cfg.noise, "Generated-mesh noise, in mean edge lengths");
  bn->add_flag("--no-gradient", no_gradient, "Time the loss value only");
  bn->callback([&] {
    action = [&] {
      const TriMesh mesh = load_mesh(mesh_path);
      bench_cfg.rng_seed = seed;
      bench_cfg.with_gradient = !no_gradient;
      const BenchResult result = bench(mesh, bench_cfg);
      for (const std::string& w : result.warnings) std::cerr << "warning: " << w << "\n";
      Json doc = header("bench");
      doc["threads"] = parallel::thread_count();
      Json reports = Json::array();
      for (const BenchReport& r : result.reports) reports.push_back(to_json(r));
      doc["reports"] = std::move(reports);
      doc["warnings"] = result.warnings;
      return doc;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (const auto n = parallel::resolve_thread_count(threads)) parallel::set_thread_count(*n);
    Output(out_path).emit(action());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
