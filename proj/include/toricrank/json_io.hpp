#pragma once

#include <json.hpp>

#include <set>
#include <vector>

#include "toricrank/complex.hpp"
#include "toricrank/ideal.hpp"
#include "toricrank/invariants.hpp"

namespace toric {

using Json = nlohmann::ordered_json;

inline constexpr int kJsonSchemaVersion = 1;

/// Report fields in declaration order; intervals as [lo, hi].
Json to_json(const InvariantReport& r);

/// Vertices as sorted 1-based edge-index arrays, faces as vertex-index arrays,
/// components, and one δ entry per requested J.
Json complex_to_json(const DeltaComplex& d, const std::vector<std::set<int>>& j_sets);

/// Members as exponent-vector arrays.
Json fiber_to_json(const Fiber& f);

Json binomials_to_json(const Graph& g, const std::vector<Binomial>& bs, const std::vector<bool>& indispensable = {});
Json circuits_to_json(const Graph& g, const std::vector<CircuitVector>& cs);
Json cycles_to_json(const Graph& g, const std::vector<EdgeCycle>& cs);

/// Wraps a payload with the top-level schema version.
Json document(const char* kind, Json payload);

}  // namespace toric
