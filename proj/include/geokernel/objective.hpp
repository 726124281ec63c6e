#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>

#include "geokernel/vec3.hpp"

namespace geokernel {

inline constexpr std::size_t kPoseCodeDim = 512;
inline constexpr std::size_t kShapeCodeDim = 2048;

/// Latent pose / shape codes as produced by an external encoder.
struct LatentCode {
  std::array<float, kPoseCodeDim> pose{};
  std::array<float, kShapeCodeDim> shape{};
};

/// Throws when any entry is NaN or infinite.
void validate(const LatentCode& code);

enum class LossTerm : std::size_t { rec = 0, gan_rec, gan_transfer, intrinsic, extrinsic };

inline constexpr std::size_t kLossTermCount = 5;
inline constexpr std::array<LossTerm, kLossTermCount> kAllLossTerms = {
    LossTerm::rec, LossTerm::gan_rec, LossTerm::gan_transfer, LossTerm::intrinsic, LossTerm::extrinsic};

std::string_view to_string(LossTerm term) noexcept;

/// Per-term scalars, indexed by LossTerm.
struct LossComponents {
  std::array<double, kLossTermCount> values{};

  double& operator[](LossTerm t) { return values[static_cast<std::size_t>(t)]; }
  double operator[](LossTerm t) const { return values[static_cast<std::size_t>(t)]; }
};

struct ActiveSet {
  std::array<bool, kLossTermCount> flags{};

  static ActiveSet all();
  static ActiveSet of(std::initializer_list<LossTerm> terms);
  bool contains(LossTerm t) const { return flags[static_cast<std::size_t>(t)]; }
  bool operator==(const ActiveSet&) const = default;
};

struct LossWeights {
  std::array<double, kLossTermCount> values{1.0, 1.0, 1.0, 1.0, 1.0};
};

struct LossReport {
  LossComponents components;
  ActiveSet active;
  double total = 0.0;
  int stage = 0;  // 1..3 when produced from a schedule, 0 for a custom mask
};

/// Stage boundaries, half-open: stage 1 is [0, transfer_start), stage 2 is
/// [transfer_start, intrinsic_start), stage 3 is [intrinsic_start, inf).
struct Schedule {
  std::int64_t transfer_start = 20'000;
  std::int64_t intrinsic_start = 30'000;
};

void validate(const Schedule& schedule);

int stage_at(const Schedule& schedule, std::int64_t iteration);

ActiveSet active_losses(const Schedule& schedule, std::int64_t iteration);

/// Mean over vertices of |x_i - x_hat_i|^2.
double reconstruction_loss(std::span<const Vec3> x, std::span<const Vec3> x_hat);

/// -log(score) for a discriminator probability in (0, 1).
double nonsaturating_gen_loss(double score);

/// Discriminator-side counterpart: -log(D(real)) - log(1 - D(fake)).
/// Provided for host training loops; not part of the generator objective.
double discriminator_loss(double real_score, double fake_score);

/// Weighted sum of the active components; inactive terms are kept in the
/// report but excluded from the total.
LossReport total_objective(const LossComponents& components, const ActiveSet& active,
                           const LossWeights& weights = {});

/// total_objective with the mask for `iteration`, stage recorded.
LossReport objective_at(const LossComponents& components, const Schedule& schedule, std::int64_t iteration,
                        const LossWeights& weights = {});

}  // namespace geokernel
