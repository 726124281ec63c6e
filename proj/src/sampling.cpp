#include "geokernel/sampling.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <utility>

#include "dijkstra.hpp"
#include "geokernel/error.hpp"
#include "omp_util.hpp"

namespace geokernel {
namespace {

void check_sizes(const TriMesh& mesh, const AdjacencyIndex& adj) {
  if (adj.vertex_count() != mesh.vertex_count()) {
    throw Error("adjacency has " + std::to_string(adj.vertex_count()) + " vertices, mesh has " +
                std::to_string(mesh.vertex_count()));
  }
}

// Marks every vertex within `depth` hops of `seed`.
void block_neighborhood(const AdjacencyIndex& adj, VertexId seed, std::size_t depth, std::vector<char>& blocked) {
  std::vector<VertexId> frontier{seed};
  std::vector<VertexId> next;
  blocked[seed] = 1;
  for (std::size_t hop = 0; hop < depth && !frontier.empty(); ++hop) {
    next.clear();
    for (VertexId u : frontier) {
      for (VertexId w : adj.ring(u)) {
        if (!blocked[w]) {
          blocked[w] = 1;
          next.push_back(w);
        }
      }
    }
    std::swap(frontier, next);
  }
}

class SeedScan {
 public:
  SeedScan(const DistortionRanking& ranking, const AdjacencyIndex& adj, std::size_t separation)
      : ranking_(ranking), adj_(adj), separation_(separation), taken_(adj.vertex_count(), 0),
        blocked_(adj.vertex_count(), 0) {}

  void take(VertexId v, std::vector<VertexId>& seeds) {
    taken_[v] = 1;
    seeds.push_back(v);
    if (separation_ >= 2) block_neighborhood(adj_, v, separation_ - 1, blocked_);
  }

  // Appends up to `need` seeds not in `state`: separated vertices first,
  // then any remaining unvisited vertices in rank order.
  void fill(const TraversalState& state, std::size_t need, std::vector<VertexId>& seeds) {
    const std::size_t target = seeds.size() + need;
    for (VertexId v : ranking_.order) {
      if (seeds.size() == target) return;
      if (!taken_[v] && !blocked_[v] && !state.contains(v)) take(v, seeds);
    }
    for (VertexId v : ranking_.order) {
      if (seeds.size() == target) return;
      if (!taken_[v] && !state.contains(v)) take(v, seeds);
    }
  }

 private:
  const DistortionRanking& ranking_;
  const AdjacencyIndex& adj_;
  std::size_t separation_;
  std::vector<char> taken_;
  std::vector<char> blocked_;
};

RegionSet regions_from_seeds(const TriMesh& mesh, const AdjacencyIndex& adj, std::size_t k,
                             std::vector<VertexId> seeds, TraversalState state) {
  RegionSet out;
  out.regions.resize(seeds.size());
  for (std::size_t r = 0; r < seeds.size(); ++r) {
    out.regions[r] = extract_region(mesh, adj, seeds[r], k);
  }
  out.seeds = std::move(seeds);
  out.traversal_state = std::move(state);
  return out;
}

}  // namespace

void validate(const SamplingConfig& cfg) {
  if (cfg.region_count < 1) throw Error("region count N must be >= 1");
  if (cfg.region_size < 2) throw Error("region size k must be >= 2, got " + std::to_string(cfg.region_size));
}

bool TraversalState::contains(VertexId v) const { return std::binary_search(visited.begin(), visited.end(), v); }

void TraversalState::insert(VertexId v) {
  const auto it = std::lower_bound(visited.begin(), visited.end(), v);
  if (it == visited.end() || *it != v) visited.insert(it, v);
}

std::size_t RegionSet::pair_count() const {
  std::size_t total = 0;
  for (const auto& r : regions) total += r.size() * (r.size() - 1) / 2;
  return total;
}

DistortionRanking distortion_scores(const TriMesh& mesh, const AdjacencyIndex& adj) {
  check_sizes(mesh, adj);
  const std::size_t v = mesh.vertex_count();
  DistortionRanking out;
  out.scores.assign(v, 0.0);
  const auto count = static_cast<long long>(v);
#pragma omp parallel for schedule(static)
  for (long long j = 0; j < count; ++j) {
    const Vec3& p = mesh.vertices[j];
    double s = 0.0;
    for (VertexId u : adj.ring(static_cast<VertexId>(j))) s += squared_norm(p - mesh.vertices[u]);
    out.scores[j] = s;
  }
  out.order.resize(v);
  std::iota(out.order.begin(), out.order.end(), VertexId{0});
  std::stable_sort(out.order.begin(), out.order.end(),
                   [&](VertexId a, VertexId b) { return out.scores[a] > out.scores[b]; });
  return out;
}

SeedSelection select_seeds(const DistortionRanking& ranking, const AdjacencyIndex& adj, const SamplingConfig& cfg,
                           const TraversalState& state) {
  validate(cfg);
  const std::size_t v = ranking.order.size();
  if (adj.vertex_count() != v) throw Error("ranking and adjacency disagree on vertex count");
  const std::size_t n = cfg.region_count;
  if (v < n) {
    throw Error("cannot select " + std::to_string(n) + " seeds from " + std::to_string(v) + " vertices");
  }

  SeedScan scan(ranking, adj, cfg.min_seed_separation);
  SeedSelection out;
  const std::size_t unvisited = v - state.size();
  if (unvisited >= n) {
    scan.fill(state, n, out.seeds);
    out.state = state;
  } else {
    // Finish the current traversal, then start a new one.
    scan.fill(state, unvisited, out.seeds);
    const std::size_t tail = out.seeds.size();
    scan.fill(TraversalState{}, n - tail, out.seeds);
    for (std::size_t i = tail; i < out.seeds.size(); ++i) out.state.insert(out.seeds[i]);
    return out;
  }
  for (VertexId s : out.seeds) out.state.insert(s);
  return out;
}

std::vector<VertexId> extract_region(const TriMesh& mesh, const AdjacencyIndex& adj, std::size_t seed,
                                     std::size_t k) {
  check_sizes(mesh, adj);
  const std::size_t v = mesh.vertex_count();
  if (seed >= v) throw Error("seed " + std::to_string(seed) + " out of range");
  if (k < 2 || k > v) {
    throw Error("region size k=" + std::to_string(k) + " outside [2, " + std::to_string(v) + "]");
  }

  detail::DijkstraWorkspace ws(v);
  std::vector<std::pair<double, VertexId>> picked;
  double cutoff = detail::kInfinity;
  ws.run(adj, static_cast<VertexId>(seed), [&](VertexId u, double d) {
    if (d > cutoff) return true;
    picked.emplace_back(d, u);
    if (picked.size() == k) cutoff = d;
    return false;
  });
  if (picked.size() < k) {
    std::size_t missing = 0;
    while (ws.settled(static_cast<VertexId>(missing))) ++missing;
    throw DisconnectedMeshError("only " + std::to_string(picked.size()) + " vertices reachable from seed " +
                                    std::to_string(seed) + ", need " + std::to_string(k),
                                missing);
  }
  std::sort(picked.begin(), picked.end());
  std::vector<VertexId> region(k);
  for (std::size_t i = 0; i < k; ++i) region[i] = picked[i].second;
  std::sort(region.begin(), region.end());
  return region;
}

RegionSet sample_regions(const TriMesh& mesh, const AdjacencyIndex& adj, const SamplingConfig& cfg,
                         const TraversalState& state) {
  validate(cfg);
  if (cfg.region_size > mesh.vertex_count()) {
    throw Error("region size k=" + std::to_string(cfg.region_size) + " exceeds vertex count " +
                std::to_string(mesh.vertex_count()));
  }
  const DistortionRanking ranking = distortion_scores(mesh, adj);
  SeedSelection sel = select_seeds(ranking, adj, cfg, state);
  return regions_from_seeds(mesh, adj, cfg.region_size, std::move(sel.seeds), std::move(sel.state));
}

RegionSet sample_random_regions(const TriMesh& mesh, const AdjacencyIndex& adj, const SamplingConfig& cfg,
                                std::uint64_t rng_seed) {
  validate(cfg);
  check_sizes(mesh, adj);
  const std::size_t v = mesh.vertex_count();
  if (v < cfg.region_count) {
    throw Error("cannot select " + std::to_string(cfg.region_count) + " seeds from " + std::to_string(v) +
                " vertices");
  }
  if (cfg.region_size > v) {
    throw Error("region size k=" + std::to_string(cfg.region_size) + " exceeds vertex count " + std::to_string(v));
  }
  std::mt19937_64 rng(rng_seed);
  std::vector<VertexId> pool(v);
  std::iota(pool.begin(), pool.end(), VertexId{0});
  for (std::size_t i = 0; i < cfg.region_count; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, v - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(cfg.region_count);
  return regions_from_seeds(mesh, adj, cfg.region_size, std::move(pool), TraversalState{});
}

}  // namespace geokernel
