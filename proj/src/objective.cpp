#include "geokernel/objective.hpp"

#include <cmath>
#include <string>

#include "geokernel/error.hpp"

namespace geokernel {
namespace {

void check_probability(double score, const char* what) {
  if (!(score > 0.0 && score < 1.0)) {
    throw Error(std::string(what) + " must lie in the open interval (0, 1), got " + std::to_string(score));
  }
}

}  // namespace

void validate(const LatentCode& code) {
  for (float x : code.pose) {
    if (!std::isfinite(x)) throw Error("pose code contains a non-finite entry");
  }
  for (float x : code.shape) {
    if (!std::isfinite(x)) throw Error("shape code contains a non-finite entry");
  }
}

std::string_view to_string(LossTerm term) noexcept {
  switch (term) {
    case LossTerm::rec: return "rec";
    case LossTerm::gan_rec: return "gan_rec";
    case LossTerm::gan_transfer: return "gan_transfer";
    case LossTerm::intrinsic: return "intrinsic";
    case LossTerm::extrinsic: return "extrinsic";
  }
  return "unknown";
}

ActiveSet ActiveSet::all() {
  ActiveSet s;
  s.flags.fill(true);
  return s;
}

ActiveSet ActiveSet::of(std::initializer_list<LossTerm> terms) {
  ActiveSet s;
  for (LossTerm t : terms) s.flags[static_cast<std::size_t>(t)] = true;
  return s;
}

void validate(const Schedule& schedule) {
  if (schedule.transfer_start <= 0 || schedule.intrinsic_start <= schedule.transfer_start) {
    throw Error("schedule boundaries must satisfy 0 < transfer_start < intrinsic_start");
  }
}

int stage_at(const Schedule& schedule, std::int64_t iteration) {
  validate(schedule);
  if (iteration < 0) throw Error("iteration must be >= 0");
  if (iteration < schedule.transfer_start) return 1;
  if (iteration < schedule.intrinsic_start) return 2;
  return 3;
}

ActiveSet active_losses(const Schedule& schedule, std::int64_t iteration) {
  switch (stage_at(schedule, iteration)) {
    case 1: return ActiveSet::of({LossTerm::rec, LossTerm::gan_rec});
    case 2: return ActiveSet::of({LossTerm::rec, LossTerm::gan_rec, LossTerm::gan_transfer, LossTerm::extrinsic});
    default: return ActiveSet::all();
  }
}

double reconstruction_loss(std::span<const Vec3> x, std::span<const Vec3> x_hat) {
  if (x.size() != x_hat.size()) {
    throw Error("reconstruction loss: " + std::to_string(x.size()) + " vs " + std::to_string(x_hat.size()) +
                " points");
  }
  if (x.empty()) throw Error("reconstruction loss of an empty point set");
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) sum += squared_norm(x[i] - x_hat[i]);
  return sum / static_cast<double>(x.size());
}

double nonsaturating_gen_loss(double score) {
  check_probability(score, "discriminator score");
  return -std::log(score);
}

double discriminator_loss(double real_score, double fake_score) {
  check_probability(real_score, "real score");
  check_probability(fake_score, "fake score");
  return -std::log(real_score) - std::log1p(-fake_score);
}

LossReport total_objective(const LossComponents& components, const ActiveSet& active, const LossWeights& weights) {
  LossReport report;
  report.components = components;
  report.active = active;
  for (LossTerm t : kAllLossTerms) {
    const double value = components[t];
    const double w = weights.values[static_cast<std::size_t>(t)];
    if (!std::isfinite(value)) throw Error("loss component '" + std::string(to_string(t)) + "' is not finite");
    if (!std::isfinite(w)) throw Error("loss weight '" + std::string(to_string(t)) + "' is not finite");
    if (active.contains(t)) report.total += w * value;
  }
  return report;
}

LossReport objective_at(const LossComponents& components, const Schedule& schedule, std::int64_t iteration,
                        const LossWeights& weights) {
  LossReport report = total_objective(components, active_losses(schedule, iteration), weights);
  report.stage = stage_at(schedule, iteration);
  return report;
}

}  // namespace geokernel
