#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "geokernel/mesh.hpp"
#include "geokernel/sampling.hpp"

namespace geokernel {

enum class BenchMethod { global, regional_random, regional_adaptive };

std::string_view to_string(BenchMethod m) noexcept;

struct BenchConfig {
  SamplingConfig sampling;
  std::size_t repetitions = 3;
  /// Generated mesh = real + Gaussian noise with sigma = noise * mean edge length.
  double noise = 1e-2;
  std::uint64_t rng_seed = 0;
  bool with_gradient = true;
};

struct BenchReport {
  std::size_t vertex_count = 0;
  BenchMethod method = BenchMethod::global;
  double wall_time_seconds = 0.0;  // median of samples
  std::vector<double> samples;
  std::size_t pair_count = 0;
  double speedup_vs_global = 1.0;
  double loss_value = 0.0;  // value from the last repetition
};

struct BenchResult {
  std::vector<BenchReport> reports;  // global, regional-random, regional-adaptive
  std::vector<std::string> warnings;
};

/// Times one training-style loss evaluation per method. Regional timings
/// include region sampling. Region size is clamped to V with a warning.
BenchResult bench(const TriMesh& mesh, const BenchConfig& cfg);

double median(std::vector<double> samples);

}  // namespace geokernel
