#pragma once

// JSON encodings used by the CLI and by fixtures. Field names are stable;
// top-level documents carry "schema": kJsonSchemaVersion.

#include "json.hpp"

#include "geokernel/bench.hpp"
#include "geokernel/geodesic.hpp"
#include "geokernel/intrinsic.hpp"
#include "geokernel/laplacian.hpp"
#include "geokernel/metrics.hpp"
#include "geokernel/objective.hpp"
#include "geokernel/sampling.hpp"

namespace geokernel {

using Json = nlohmann::ordered_json;

inline constexpr int kJsonSchemaVersion = 1;

Json to_json(const GeodesicMatrix& m);
Json to_json(const TraversalState& s);
Json to_json(const RegionSet& r);
Json to_json(const LossValue& v, bool include_gradient = false);
Json to_json(const LossReport& r);
Json to_json(const MetricReport& r);
Json to_json(const BenchReport& r);
Json manifest_json(const LaplacianStack& stack);

TraversalState traversal_state_from_json(const Json& j);
/// Accepts a RegionSet document (as written by to_json) with or without the
/// schema field.
RegionSet region_set_from_json(const Json& j);

}  // namespace geokernel
