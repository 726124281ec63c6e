#pragma once

// Internal binary-heap Dijkstra shared by the geodesic, sampling, loss and
// metric kernels. One workspace per thread; reset cost is proportional to the
// number of vertices touched by the previous run.

#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <span>
#include <utility>
#include <vector>

#include "geokernel/mesh.hpp"

namespace geokernel::detail {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

class DijkstraWorkspace {
 public:
  explicit DijkstraWorkspace(std::size_t vertex_count)
      : dist_(vertex_count, kInfinity), pred_(vertex_count, kNoVertex), slot_(vertex_count, -1) {}

  /// Runs from `source`, calling `on_settle(v, d)` for each vertex in settle
  /// order (nondecreasing distance, ties by ascending index). Stops early when
  /// `on_settle` returns true. Returns the number of settled vertices.
  ///
  /// Predecessor ties are broken toward the smaller vertex index; a tie only
  /// counts over a positive-length edge so the forest stays acyclic.
  template <class OnSettle>
  std::size_t run(const AdjacencyIndex& adj, VertexId source, OnSettle&& on_settle) {
    reset();
    using Entry = std::pair<double, VertexId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    touch(source);
    dist_[source] = 0.0;
    pred_[source] = source;
    heap.emplace(0.0, source);
    while (!heap.empty()) {
      const auto [d, u] = heap.top();
      heap.pop();
      if (slot_[u] >= 0 || d > dist_[u]) continue;
      slot_[u] = static_cast<std::int32_t>(order_.size());
      order_.push_back(u);
      if (on_settle(u, d)) break;
      const auto ring = adj.ring(u);
      const auto lengths = adj.ring_lengths(u);
      for (std::size_t e = 0; e < ring.size(); ++e) {
        const VertexId w = ring[e];
        if (slot_[w] >= 0) continue;
        const double nd = d + lengths[e];
        if (nd < dist_[w]) {
          if (dist_[w] == kInfinity) touch(w);
          dist_[w] = nd;
          pred_[w] = u;
          heap.emplace(nd, w);
        } else if (nd == dist_[w] && lengths[e] > 0.0 && u < pred_[w]) {
          pred_[w] = u;
        }
      }
    }
    return order_.size();
  }

  double distance(VertexId v) const { return dist_[v]; }
  VertexId predecessor(VertexId v) const { return pred_[v]; }
  bool settled(VertexId v) const { return slot_[v] >= 0; }
  std::int32_t slot(VertexId v) const { return slot_[v]; }
  std::span<const VertexId> order() const { return order_; }

 private:
  void touch(VertexId v) { touched_.push_back(v); }

  void reset() {
    for (VertexId v : touched_) {
      dist_[v] = kInfinity;
      pred_[v] = kNoVertex;
      slot_[v] = -1;
    }
    touched_.clear();
    order_.clear();
  }

  std::vector<double> dist_;
  std::vector<VertexId> pred_;
  std::vector<std::int32_t> slot_;
  std::vector<VertexId> touched_;
  std::vector<VertexId> order_;
};

}  // namespace geokernel::detail
