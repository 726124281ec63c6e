#include "geokernel/geodesic.hpp"

#include <algorithm>
#include <string>

#include "dijkstra.hpp"
#include "geokernel/error.hpp"
#include "omp_util.hpp"

namespace geokernel {
namespace {

void check_adjacency(const TriMesh& mesh, const AdjacencyIndex& adj) {
  validate_surface(mesh);
  if (adj.vertex_count() != mesh.vertex_count()) {
    throw Error("adjacency has " + std::to_string(adj.vertex_count()) + " vertices, mesh has " +
                std::to_string(mesh.vertex_count()));
  }
}

ShortestPathTree snapshot_tree(const detail::DijkstraWorkspace& ws) {
  ShortestPathTree tree;
  const auto order = ws.order();
  tree.source = order.front();
  tree.vertices.assign(order.begin(), order.end());
  tree.parent_slot.resize(order.size());
  tree.distances.resize(order.size());
  for (std::size_t s = 0; s < order.size(); ++s) {
    const VertexId v = order[s];
    tree.distances[s] = ws.distance(v);
    tree.parent_slot[s] = s == 0 ? -1 : ws.slot(ws.predecessor(v));
  }
  return tree;
}

}  // namespace

std::optional<std::size_t> ShortestPathTree::slot_of(VertexId v) const {
  const auto it = std::find(vertices.begin(), vertices.end(), v);
  if (it == vertices.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

std::vector<VertexId> ShortestPathTree::path_to(VertexId target) const {
  const auto slot = slot_of(target);
  if (!slot) throw Error("vertex " + std::to_string(target) + " is not in the shortest-path tree");
  std::vector<VertexId> path;
  for (std::int32_t s = static_cast<std::int32_t>(*slot); s >= 0; s = parent_slot[s]) {
    path.push_back(vertices[s]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

SingleSourceResult single_source_geodesic(const TriMesh& mesh, const AdjacencyIndex& adj, std::size_t source) {
  check_adjacency(mesh, adj);
  const std::size_t v = mesh.vertex_count();
  if (source >= v) {
    throw Error("source " + std::to_string(source) + " out of range [0, " + std::to_string(v) + ")");
  }
  detail::DijkstraWorkspace ws(v);
  const std::size_t reached = ws.run(adj, static_cast<VertexId>(source), [](VertexId, double) { return false; });
  if (reached != v) {
    std::size_t missing = 0;
    while (ws.settled(static_cast<VertexId>(missing))) ++missing;
    const auto labels = connected_components(adj);
    throw DisconnectedMeshError("mesh is disconnected: vertex " + std::to_string(missing) + " (component " +
                                    std::to_string(labels[missing]) + ") is unreachable from source " +
                                    std::to_string(source) + " (component " + std::to_string(labels[source]) +
                                    ")",
                                missing);
  }
  SingleSourceResult out;
  out.distances.resize(v);
  out.predecessors.resize(v);
  for (std::size_t i = 0; i < v; ++i) {
    out.distances[i] = ws.distance(static_cast<VertexId>(i));
    out.predecessors[i] = ws.predecessor(static_cast<VertexId>(i));
  }
  return out;
}

GeodesicMatrix pairwise_geodesic(const TriMesh& mesh, const AdjacencyIndex& adj, std::span<const VertexId> subset) {
  check_adjacency(mesh, adj);
  if (subset.empty()) throw Error("pairwise_geodesic needs a non-empty subset");
  const std::size_t v = mesh.vertex_count();
  const std::size_t m = subset.size();

  std::vector<std::int32_t> rank(v, -1);
  for (std::size_t a = 0; a < m; ++a) {
    const VertexId s = subset[a];
    if (s >= v) throw Error("subset vertex " + std::to_string(s) + " out of range");
    if (rank[s] >= 0) throw Error("subset contains vertex " + std::to_string(s) + " more than once");
    rank[s] = static_cast<std::int32_t>(a);
  }

  GeodesicMatrix out;
  out.subset.assign(subset.begin(), subset.end());
  out.distances.assign(m * m, 0.0);
  out.trees.resize(m);

  detail::parallel_for(
      m, [v] { return detail::DijkstraWorkspace(v); },
      [&](detail::DijkstraWorkspace& ws, std::size_t a) {
        std::size_t found = 0;
        double* row = out.distances.data() + a * m;
        ws.run(adj, subset[a], [&](VertexId u, double d) {
          if (rank[u] < 0) return false;
          row[rank[u]] = d;
          return ++found == m;
        });
        if (found != m) {
          const auto missing = std::find_if(subset.begin(), subset.end(), [&](VertexId t) { return !ws.settled(t); });
          throw DisconnectedMeshError("subset vertex " + std::to_string(*missing) + " is unreachable from " +
                                          std::to_string(subset[a]) + " (mesh is disconnected)",
                                      *missing);
        }
        out.trees[a] = snapshot_tree(ws);
      });
  return out;
}

DistanceMatrix all_pairs_oracle(const TriMesh& mesh, const AdjacencyIndex& adj) {
  check_adjacency(mesh, adj);
  const std::size_t n = mesh.vertex_count();
  if (n > kAllPairsVertexLimit) {
    throw Error("all-pairs oracle limited to " + std::to_string(kAllPairsVertexLimit) + " vertices, mesh has " +
                std::to_string(n));
  }
  constexpr auto inf = detail::kInfinity;
  std::vector<double> d(n * n, inf);
  std::vector<VertexId> next(n * n, detail::kNoVertex);
  for (std::size_t i = 0; i < n; ++i) {
    d[i * n + i] = 0.0;
    next[i * n + i] = static_cast<VertexId>(i);
    const auto ring = adj.ring(static_cast<VertexId>(i));
    const auto lengths = adj.ring_lengths(static_cast<VertexId>(i));
    for (std::size_t e = 0; e < ring.size(); ++e) {
      d[i * n + ring[e]] = lengths[e];
      next[i * n + ring[e]] = ring[e];
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const double dik = d[i * n + k];
      if (dik == inf) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const double cand = dik + d[k * n + j];
        if (cand < d[i * n + j]) {
          d[i * n + j] = cand;
          next[i * n + j] = next[i * n + k];
        }
      }
    }
  }

  DistanceMatrix out;
  out.n = n;
  out.values.assign(n * n, inf);
  std::vector<VertexId> path;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (next[i * n + j] == detail::kNoVertex) continue;
      path.assign(1, static_cast<VertexId>(i));
      for (std::size_t u = i; u != j; u = next[u * n + j]) path.push_back(next[u * n + j]);
      out.values[i * n + j] = path_length(adj, path);
    }
  }
  return out;
}

double path_length(const AdjacencyIndex& adj, std::span<const VertexId> path) {
  double total = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    const auto ring = adj.ring(path[i - 1]);
    const auto it = std::lower_bound(ring.begin(), ring.end(), path[i]);
    if (it == ring.end() || *it != path[i]) {
      throw Error("path step " + std::to_string(path[i - 1]) + " -> " + std::to_string(path[i]) + " is not an edge");
    }
    total += adj.ring_lengths(path[i - 1])[static_cast<std::size_t>(it - ring.begin())];
  }
  return total;
}

}  // namespace geokernel
