#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "geokernel/mesh.hpp"

namespace geokernel {

inline constexpr std::size_t kDefaultMetricPairs = 10'000;

enum class DistortionMode { relative, absolute };

struct MetricReport {
  std::string name;
  double value = 0.0;
  std::size_t sample_pairs = 0;
  std::uint64_t rng_seed = 0;
};

/// Mean geodesic distortion over `sample_pairs` vertex pairs (i != j) drawn
/// uniformly with a seeded generator. Relative mode divides each
/// |d_a - d_b| by d_a when d_a > 0; absolute mode never divides.
MetricReport interpolation_error(const TriMesh& a, const TriMesh& b, std::size_t sample_pairs = kDefaultMetricPairs,
                                 std::uint64_t rng_seed = 0, DistortionMode mode = DistortionMode::relative);

/// Mean Euclidean point-to-point distance over corresponding vertices.
MetricReport disentanglement_error(const TriMesh& a, const TriMesh& b);

}  // namespace geokernel
