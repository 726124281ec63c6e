#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "geokernel/mesh.hpp"

namespace geokernel {

/// Per-vertex local distortion: score[j] = sum over one-ring u of |p_j - u|^2.
struct DistortionRanking {
  std::vector<double> scores;
  std::vector<VertexId> order;  // descending score, ties by ascending index
};

struct SamplingConfig {
  std::size_t region_count = 4;
  std::size_t region_size = 300;
  /// Minimum hop distance between seeds of one call; 0 disables the check.
  std::size_t min_seed_separation = 2;
};

void validate(const SamplingConfig& cfg);

/// Vertices already used as seeds since the last reset. Kept sorted.
struct TraversalState {
  std::vector<VertexId> visited;

  bool contains(VertexId v) const;
  void insert(VertexId v);
  std::size_t size() const noexcept { return visited.size(); }
  bool operator==(const TraversalState&) const = default;
};

struct SeedSelection {
  std::vector<VertexId> seeds;  // in selection order
  TraversalState state;
};

struct RegionSet {
  std::vector<std::vector<VertexId>> regions;  // each sorted ascending
  std::vector<VertexId> seeds;
  TraversalState traversal_state;  // state after this selection

  std::size_t pair_count() const;
};

DistortionRanking distortion_scores(const TriMesh& mesh, const AdjacencyIndex& adj);

/// Greedy scan of `ranking.order`, taking unvisited vertices that are at least
/// `min_seed_separation` hops from the seeds already taken in this call.
///
/// If the separation rule leaves the scan short while unvisited vertices
/// remain, the shortfall is filled from the highest-ranked unvisited vertices
/// regardless of separation. If fewer than N unvisited vertices remain, all
/// of them are taken, the state resets, and the remaining slots are filled by
/// a fresh scan. Every vertex therefore seeds once before any vertex repeats.
SeedSelection select_seeds(const DistortionRanking& ranking, const AdjacencyIndex& adj, const SamplingConfig& cfg,
                           const TraversalState& state);

/// The k vertices geodesically nearest to `seed`, seed included; ties at the
/// cutoff distance go to the smaller index. Returned sorted ascending.
std::vector<VertexId> extract_region(const TriMesh& mesh, const AdjacencyIndex& adj, std::size_t seed, std::size_t k);

/// distortion_scores -> select_seeds -> extract_region. Scores come from
/// `mesh`; pass the generated mesh here to rank on generated geometry.
RegionSet sample_regions(const TriMesh& mesh, const AdjacencyIndex& adj, const SamplingConfig& cfg,
                         const TraversalState& state);

/// Baseline: N distinct seeds drawn uniformly with a seeded generator.
RegionSet sample_random_regions(const TriMesh& mesh, const AdjacencyIndex& adj, const SamplingConfig& cfg,
                                std::uint64_t rng_seed);

}  // namespace geokernel
