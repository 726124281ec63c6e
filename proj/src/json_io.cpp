#include "geokernel/json_io.hpp"

#include <string>

#include "geokernel/error.hpp"

namespace geokernel {

Json to_json(const GeodesicMatrix& m) {
  Json rows = Json::array();
  for (std::size_t a = 0; a < m.size(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < m.size(); ++b) row.push_back(m.at(a, b));
    rows.push_back(std::move(row));
  }
  return Json{{"subset", m.subset}, {"distances", std::move(rows)}};
}

Json to_json(const TraversalState& s) { return Json(s.visited); }

Json to_json(const RegionSet& r) {
  return Json{{"seeds", r.seeds}, {"regions", r.regions}, {"state", to_json(r.traversal_state)}};
}

Json to_json(const LossValue& v, bool include_gradient) {
  Json per_region = Json::array();
  for (const RegionLoss& r : v.per_region) {
    per_region.push_back(Json{{"seed", r.seed}, {"value", r.value}, {"pair_count", r.pair_count}});
  }
  Json out{{"value", v.value}, {"pair_count", v.pair_count}, {"per_region", std::move(per_region)}};
  out["gradient_norm"] = v.gradient.empty() ? Json(nullptr) : Json(v.gradient_norm());
  if (include_gradient && !v.gradient.empty()) {
    Json g = Json::array();
    for (const Vec3& p : v.gradient) g.push_back(Json::array({p.x, p.y, p.z}));
    out["gradient"] = std::move(g);
  }
  return out;
}

Json to_json(const LossReport& r) {
  Json out;
  for (LossTerm t : kAllLossTerms) out[std::string(to_string(t))] = r.components[t];
  out["total"] = r.total;
  out["stage"] = r.stage;
  Json active = Json::array();
  for (LossTerm t : kAllLossTerms) {
    if (r.active.contains(t)) active.push_back(std::string(to_string(t)));
  }
  out["active"] = std::move(active);
  return out;
}

Json to_json(const MetricReport& r) {
  return Json{{"name", r.name}, {"value", r.value}, {"sample_pairs", r.sample_pairs}, {"rng_seed", r.rng_seed}};
}

Json to_json(const BenchReport& r) {
  return Json{{"vertex_count", r.vertex_count},
              {"method", std::string(to_string(r.method))},
              {"wall_time_seconds", r.wall_time_seconds},
              {"samples", r.samples},
              {"pair_count", r.pair_count},
              {"speedup_vs_global", r.speedup_vs_global},
              {"loss_value", r.loss_value}};
}

Json manifest_json(const LaplacianStack& stack) {
  Json iterations = Json::array();
  for (const LaplacianMember& m : stack.members) iterations.push_back(m.iterations);
  return Json{{"seed", stack.rng_seed},
              {"group_size", stack.group_size},
              {"iterations", std::move(iterations)},
              {"target_points", stack.target_points}};
}

TraversalState traversal_state_from_json(const Json& j) {
  if (!j.is_array()) throw Error("traversal state must be a JSON array of vertex indices");
  TraversalState s;
  for (const Json& v : j) {
    if (!v.is_number_unsigned()) throw Error("traversal state entries must be non-negative integers");
    s.insert(v.get<VertexId>());
  }
  return s;
}

RegionSet region_set_from_json(const Json& j) {
  try {
    RegionSet r;
    r.seeds = j.at("seeds").get<std::vector<VertexId>>();
    r.regions = j.at("regions").get<std::vector<std::vector<VertexId>>>();
    if (j.contains("state")) r.traversal_state = traversal_state_from_json(j.at("state"));
    if (r.seeds.size() != r.regions.size()) throw Error("region set has mismatched seeds and regions");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed region set JSON: ") + e.what());
  }
}

}  // namespace geokernel
