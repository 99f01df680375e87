#pragma once

#include <json.hpp>

#include "skcf/canonical.hpp"

namespace skcf::io {

using nlohmann::json;

// Exact scalars: {"re": "p/q", "im": "p/q"}; approximate ones carry JSON
// floats. On input, JSON integers are read as exact and a missing "im"
// means zero.
json to_json(const Scalar& s);
json to_json(const ExtScalar& z);  // inf is the string "inf"
Scalar scalar_from_json(const json& j);
ExtScalar ext_from_json(const json& j);

/// {"dims":[2,m,n], "amps":[{"i":[i,j,k], "re":..., "im":...}, ...]},
/// amplitudes in lexicographic index order.
json to_json(const State& s);
State state_from_json(const json& j);

json to_json(const Lft& l);
json to_json(const KroneckerStructure& ks);
/// {"h","g","eps","nu","eta":[{"sig","count"}],"xhat","meta":{"mode","tol","snapped"}}
json to_json(const CanonicalForm& cf);

}  // namespace skcf::io
