// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "geokernel/geodesic.hpp"
#include "geokernel/intrinsic.hpp"
#include "geokernel/json_io.hpp"
#include "geokernel/laplacian.hpp"
#include "geokernel/metrics.hpp"
#include "geokernel/obj_io.hpp"
#include "geokernel/objective.hpp"
#include "geokernel/sampling.hpp"
#include "geokernel/synthetic.hpp"
#include "gradcheck.hpp"

using namespace geokernel;
using namespace geokernel::testing;

namespace {

const std::string kCli = GEOKERNEL_CLI;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail.str("");
    pass = false;
    detail << why << "; ";
  }
};

TriMesh with_positions(const TriMesh& m, std::vector<Vec3> p) {
  TriMesh out = m;
  out.vertices = std::move(p);
  return out;
}

Outcome geodesic_oracle() {
  Outcome o;
  Rng rng(1001);
  std::size_t entries = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const TriMesh m = random_connected_mesh(rng, 10, 200);
    const AdjacencyIndex adj = build_adjacency(m);
    std::vector<VertexId> all(m.vertex_count());
    std::iota(all.begin(), all.end(), VertexId{0});
    const GeodesicMatrix g = pairwise_geodesic(m, adj, all);
    const DistanceMatrix oracle = all_pairs_oracle(m, adj);
    for (std::size_t a = 0; a < all.size(); ++a) {
      for (std::size_t b = 0; b < all.size(); ++b) {
        ++entries;
        if (g.at(a, b) != oracle.at(a, b)) {
          o.fail("mesh " + std::to_string(trial) + " entry (" + std::to_string(a) + "," + std::to_string(b) + ")");
          return o;
        }
      }
    }
  }
  o.detail << "50 meshes, " << entries << " entries bitwise equal";
  return o;
}

Outcome gradient_fd() {
  Outcome o;
  Rng rng(2002);
  std::uniform_real_distribution<double> u(-1e-3, 1e-3);
  int accepted = 0, resampled = 0;
  std::size_t components = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 24; ++trial) {
    const bool global = trial % 4 == 3;
    const TriMesh m = random_connected_mesh(rng, 30, global ? 120 : 200);
    const AdjacencyIndex adj = build_adjacency(m);
    const RegionSet regions = global ? whole_mesh_region(m.vertex_count())
                                     : sample_regions(m, adj, SamplingConfig{4, std::min<std::size_t>(40, m.vertex_count()), 2}, {});
    bool done = false;
    for (int attempt = 0; attempt < 20 && !done; ++attempt) {
      std::vector<Vec3> gen = m.vertices;
      for (Vec3& p : gen) p = p + Vec3{u(rng), u(rng), u(rng)};
      const GradCheck c = finite_difference_check(m, gen, adj, regions, 1e-6, 1e-8);
      if (c.path_switched) {
        ++resampled;
        continue;
      }
      done = true;
      ++accepted;
      components += c.checked;
      worst = std::max(worst, c.max_rel_error);
      if (!(c.max_rel_error < 1e-4)) {
        o.fail("mesh " + std::to_string(trial) + " rel error " + std::to_string(c.max_rel_error) + " at vertex " +
               std::to_string(c.worst_vertex));
      }
      if (c.checked == 0) o.fail("mesh " + std::to_string(trial) + " had no components above 1e-8");
    }
    if (!done) o.fail("mesh " + std::to_string(trial) + ": every perturbation switched a path");
  }
  if (accepted < 20) o.fail("only " + std::to_string(accepted) + " meshes checked");
  if (o.pass) {
    o.detail << accepted << " meshes, " << components << " components, max rel error " << worst << ", "
             << resampled << " trials resampled after a path switch";
  }
  return o;
}

Outcome zero_at_identity() {
  Outcome o;
  Rng rng(3003);
  for (int trial = 0; trial < 10; ++trial) {
    const TriMesh m = random_connected_mesh(rng, 20, 200);
    const AdjacencyIndex adj = build_adjacency(m);
    const RegionSet regions = sample_regions(m, adj, SamplingConfig{4, std::min<std::size_t>(30, m.vertex_count()), 2}, {});
    const TriMesh copy = m;
    const LossValue regional = intrinsic_loss(m, copy.vertices, adj, regions, true);
    if (regional.value != 0.0 || regional.gradient_norm() != 0.0) o.fail("intrinsic_loss");
    if (global_intrinsic_loss(m, copy.vertices, adj, true).value != 0.0) o.fail("global_intrinsic_loss");
    if (interpolation_error(m, copy, 2000, trial).value != 0.0) o.fail("interpolation_error (relative)");
    if (interpolation_error(m, copy, 2000, trial, DistortionMode::absolute).value != 0.0) {
      o.fail("interpolation_error (absolute)");
    }
    if (disentanglement_error(m, copy).value != 0.0) o.fail("disentanglement_error");
    if (reconstruction_loss(m.vertices, copy.vertices) != 0.0) o.fail("reconstruction_loss");
  }
  if (o.pass) o.detail << "four functions exactly 0.0 on 10 meshes";
  return o;
}

Outcome bench_speedup(const TempDir& dir) {
  Outcome o;
  const TriMesh body = synthetic::body_proxy();
  save_mesh(body, dir / "body.obj");
  std::string out;
  const auto t0 = std::chrono::steady_clock::now();
  const int status = run_command(kCli + " bench --mesh " + (dir / "body.obj").string() + " --regions 4 --k 300", &out);
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (status != 0) {
    o.fail("bench exited " + std::to_string(status));
    return o;
  }
  const Json j = Json::parse(out);
  const Json* global = nullptr;
  const Json* random = nullptr;
  const Json* adaptive = nullptr;
  for (const Json& r : j["reports"]) {
    if (r["method"] == "global") global = &r;
    if (r["method"] == "regional-random") random = &r;
    if (r["method"] == "regional-adaptive") adaptive = &r;
  }
  if (!global || !random || !adaptive) {
    o.fail("missing method report");
    return o;
  }
  const double speedup = (*adaptive)["speedup_vs_global"].get<double>();
  if (j["reports"][0]["vertex_count"] != 6890) o.fail("vertex count");
  if (!(speedup >= 3.0)) o.fail("adaptive speedup " + std::to_string(speedup));
  if ((*adaptive)["pair_count"] != 179400) o.fail("adaptive pair count");
  if ((*random)["pair_count"] != 179400) o.fail("random pair count");
  if ((*global)["pair_count"] != 23732605) o.fail("global pair count");
  if (elapsed > 120.0) o.fail("runtime " + std::to_string(elapsed) + " s");
  if (o.pass) {
    o.detail << "global " << (*global)["wall_time_seconds"].get<double>() << " s, adaptive "
             << (*adaptive)["wall_time_seconds"].get<double>() << " s, speedup " << speedup
             << ", pairs 179400 vs 23732605, run " << elapsed << " s";
  }
  return o;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

Outcome loss_correlation() {
  Outcome o;
  const TriMesh fixture = synthetic::body_proxy(40, 40);
  const AdjacencyIndex adj = build_adjacency(fixture);
  const double edge = synthetic::mean_edge_length(fixture);
  const SamplingConfig cfg{};
  Rng rng(4004);
  std::uniform_real_distribution<double> log_amp(std::log(1e-3), std::log(1e-2));
  std::normal_distribution<double> n(0.0, 1.0);

  auto direction = [&] {
    std::vector<Vec3> d(fixture.vertex_count());
    for (Vec3& p : d) p = Vec3{n(rng), n(rng), n(rng)} * edge;
    return d;
  };
  auto deform = [&](const std::vector<Vec3>& dir, double amp) {
    std::vector<Vec3> p = fixture.vertices;
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = p[i] + dir[i] * amp;
    return p;
  };

  std::vector<double> regional, global;
  TraversalState state;
  for (int trial = 0; trial < 100; ++trial) {
    const std::vector<Vec3> gen = deform(direction(), std::exp(log_amp(rng)));
    RegionSet regions = sample_regions(fixture, adj, cfg, state);
    state = regions.traversal_state;
    regional.push_back(intrinsic_loss(fixture, gen, adj, regions, false).value);
    global.push_back(global_intrinsic_loss(fixture, gen, adj, false).value);
  }
  const double r = pearson(regional, global);
  if (!(r > 0.9)) o.fail("Pearson r " + std::to_string(r));

  const RegionSet fixed = sample_regions(fixture, adj, cfg, {});
  int monotone_runs = 0;
  for (int run = 0; run < 5; ++run) {
    const std::vector<Vec3> dir = direction();
    double prev_r = -1.0, prev_g = -1.0;
    for (double amp : {1e-3, 3e-3, 1e-2}) {
      const std::vector<Vec3> gen = deform(dir, amp);
      const double lr = intrinsic_loss(fixture, gen, adj, fixed, false).value;
      const double lg = global_intrinsic_loss(fixture, gen, adj, false).value;
      if (!(lr > prev_r) || !(lg > prev_g)) o.fail("not monotone at amplitude " + std::to_string(amp));
      prev_r = lr;
      prev_g = lg;
    }
    ++monotone_runs;
  }
  if (o.pass) {
    o.detail << "V=" << fixture.vertex_count() << ", r=" << r << " over 100 deformations; monotone over {1e-3,3e-3,1e-2} in "
             << monotone_runs << " directions";
  }
  return o;
}

Outcome schedule() {
  Outcome o;
  const Schedule s;
  const ActiveSet one = ActiveSet::of({LossTerm::rec, LossTerm::gan_rec});
  const ActiveSet two = ActiveSet::of({LossTerm::rec, LossTerm::gan_rec, LossTerm::gan_transfer, LossTerm::extrinsic});
  if (!(active_losses(s, 10'000) == one)) o.fail("iteration 10000");
  if (!(active_losses(s, 25'000) == two)) o.fail("iteration 25000");
  if (!(active_losses(s, 35'000) == ActiveSet::all())) o.fail("iteration 35000");
  if (!(active_losses(s, 19'999) == one) || !(active_losses(s, 20'000) == two)) o.fail("boundary 20000");
  if (!(active_losses(s, 29'999) == two) || !(active_losses(s, 30'000) == ActiveSet::all())) o.fail("boundary 30000");
  LossComponents c;
  c.values = {1, 2, 4, 8, 16};
  if (objective_at(c, s, 10'000).total != 3.0 || objective_at(c, s, 25'000).total != 23.0 ||
      objective_at(c, s, 35'000).total != 31.0) {
    o.fail("totals");
  }
  if (o.pass) o.detail << "stages 1/2/3 at 10000/25000/35000, half-open boundaries";
  return o;
}

// Drops the fields that measure time, and the echoed worker count that the
// harness varies on purpose; everything else must repeat exactly.
std::string strip_timings(const std::string& text) {
  Json j = Json::parse(text);
  j.erase("threads");
  for (Json& r : j["reports"]) {
    r.erase("wall_time_seconds");
    r.erase("samples");
    r.erase("speedup_vs_global");
  }
  return j.dump();
}

Outcome cli_determinism(const TempDir& dir) {
  Outcome o;
  const TriMesh real = synthetic::jitter(synthetic::uv_sphere(14, 20), 0.01, 5);
  save_mesh(real, dir / "real.obj");
  save_mesh(synthetic::jitter(real, 0.01, 6), dir / "gen.obj");
  const std::string r = (dir / "real.obj").string();
  const std::string g = (dir / "gen.obj").string();

  struct Case {
    std::string args;
    std::vector<std::string> files;  // also compared, relative to the run directory
  };
  const std::vector<Case> cases = {
      {"geodesic --mesh " + r + " --source 3", {}},
      {"geodesic --mesh " + r + " --subset 1,5,9,40", {}},
      {"regions --mesh " + r + " --regions 4 --k 30 --separation 2", {}},
      {"regions --mesh " + r + " --regions 4 --k 30 --sampling random", {}},
      {"intrinsic-loss --real " + r + " --gen " + g + " --k 40 --emit-gradient", {}},
      {"intrinsic-loss --real " + r + " --gen " + g + " --k 40 --sampling random", {}},
      {"intrinsic-loss --real " + r + " --gen " + g + " --global", {}},
      {"smooth --mesh " + r + " --iterations 20 --lambda 0.5 --mesh-out @/s.obj", {"s.obj"}},
      {"lap-group --mesh " + r + " --group-size 3 --target-points 64 --out-dir @/grp",
       {"grp/manifest.json", "grp/member_0.obj", "grp/member_1.obj", "grp/member_2.obj"}},
      {"downsample --mesh " + r + " --target-points 50 --points-out @/p.obj", {"p.obj"}},
      {"metrics --real " + r + " --gen " + g + " --pairs 3000", {}},
      {"metrics --real " + r + " --gen " + g + " --pairs 3000 --mode absolute", {}},
      {"bench --mesh " + r + " --k 40", {}},
  };
  int compared = 0;
  for (const std::string& seed : {"0", "17"}) {
    for (const Case& c : cases) {
      std::string outputs[2];
      std::vector<std::string> files[2];
      for (int rep = 0; rep < 2; ++rep) {
        const std::filesystem::path run_dir = dir / "run";
        std::filesystem::remove_all(run_dir);
        std::filesystem::create_directories(run_dir);
        std::string args = c.args;
        for (std::size_t at; (at = args.find('@')) != std::string::npos;) args.replace(at, 1, run_dir.string());
        const std::string cmd = kCli + " " + args + " --seed " + seed + " --threads " + std::to_string(1 + rep * 3);
        if (run_command(cmd + " 2>/dev/null", &outputs[rep]) != 0) {
          o.fail("exit status: " + args);
          continue;
        }
        for (const std::string& f : c.files) files[rep].push_back(read_file(run_dir / f));
      }
      const bool timed = c.args.rfind("bench", 0) == 0;
      const bool same = timed ? strip_timings(outputs[0]) == strip_timings(outputs[1]) : outputs[0] == outputs[1];
      if (!same || files[0] != files[1]) o.fail("output differs: " + c.args + " --seed " + seed);
      ++compared;
    }
  }
  if (o.pass) {
    o.detail << compared << " invocation pairs byte-identical (1 vs 4 threads); bench compared without timing fields";
  }
  return o;
}

Outcome smoothing() {
  Outcome o;
  Rng rng(5005);
  double worst_rigid = 0.0;
  double worst_rise = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const TriMesh m = random_connected_mesh(rng, 10, 200);
    const AdjacencyIndex adj = build_adjacency(m);
    if (laplacian_smooth(m, adj, {0, 0.5}).vertices != m.vertices) o.fail("iterations=0 changed the mesh");

    TriMesh cur = m;
    double energy = membrane_energy(adj, cur.vertices);
    for (int it = 0; it < 100; ++it) {
      cur = laplacian_smooth(cur, adj, {1, 0.5});
      const double e = membrane_energy(adj, cur.vertices);
      if (e > energy) {
        worst_rise = std::max(worst_rise, (e - energy) / energy);
        o.fail("energy rose on mesh " + std::to_string(trial) + " at iteration " + std::to_string(it + 1));
        break;
      }
      energy = e;
    }

    const RigidMotion motion = random_rigid_motion(rng);
    const TriMesh moved = with_positions(m, transform_points(motion, m.vertices));
    const TriMesh a = laplacian_smooth(moved, adj, {100, 0.5});
    const std::vector<Vec3> b = transform_points(motion, laplacian_smooth(m, adj, {100, 0.5}).vertices);
    for (std::size_t i = 0; i < b.size(); ++i) worst_rigid = std::max(worst_rigid, distance(a.vertices[i], b[i]));
  }
  if (!(worst_rigid <= 1e-9)) o.fail("rigid motion mismatch " + std::to_string(worst_rigid));
  if (o.pass) o.detail << "20 meshes: identity at 0, energy non-increasing over 100 steps, rigid error " << worst_rigid;
  return o;
}

Outcome traversal_coverage() {
  Outcome o;
  Rng rng(6006);
  int meshes = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const TriMesh m = random_connected_mesh(rng, 6, 100);
    const AdjacencyIndex adj = build_adjacency(m);
    const std::size_t v = m.vertex_count();
    const std::size_t n = 1 + rng() % std::min<std::size_t>(6, v);
    const std::size_t sep = rng() % 4;
    const SamplingConfig cfg{n, std::min<std::size_t>(v, 2 + rng() % 8), sep};
    std::vector<VertexId> history;
    TraversalState state;
    while (history.size() < 2 * v + n) {
      const RegionSet r = sample_regions(m, adj, cfg, state);
      history.insert(history.end(), r.seeds.begin(), r.seeds.end());
      state = r.traversal_state;
    }
    // the first v seeds must be all distinct, and so must the next v
    for (std::size_t start : {std::size_t{0}, v}) {
      std::vector<VertexId> window(history.begin() + static_cast<std::ptrdiff_t>(start),
                                   history.begin() + static_cast<std::ptrdiff_t>(start + v));
      std::sort(window.begin(), window.end());
      if (std::adjacent_find(window.begin(), window.end()) != window.end()) {
        o.fail("mesh " + std::to_string(trial) + " (V=" + std::to_string(v) + ", N=" + std::to_string(n) +
               ", sep=" + std::to_string(sep) + ") repeated a seed before full coverage");
        break;
      }
    }
    ++meshes;
  }
  if (o.pass) o.detail << meshes << " meshes with V <= 100, two full traversals each";
  return o;
}

}  // namespace

int main() {
  TempDir dir("acceptance");
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"geodesic-oracle-equivalence", geodesic_oracle},
      {"gradient-finite-difference", gradient_fd},
      {"zero-at-identity", zero_at_identity},
      {"regional-speedup-and-pair-counts", [&] { return bench_speedup(dir); }},
      {"regional-global-loss-agreement", loss_correlation},
      {"schedule-fidelity", schedule},
      {"cli-determinism", [&] { return cli_determinism(dir); }},
      {"laplacian-smoothing", smoothing},
      {"traversal-coverage", traversal_coverage},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !out.pass;
    std::printf("%s %s (%.1f s): %s\n", out.pass ? "PASS" : "FAIL", c.name, secs, out.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
