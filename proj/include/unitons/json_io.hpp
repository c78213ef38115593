#pragma once

#include "unitons/bundles.hpp"
#include "unitons/canonical.hpp"
#include "unitons/extsol.hpp"
#include "unitons/lattice.hpp"

#include <json.hpp>

namespace unitons {

using nlohmann::json;

json to_json(const LatticeElement& xi);
LatticeElement lattice_from_json(const json& j);

json to_json(const Poly& p); // array of coefficient strings, lowest first
Poly poly_from_json(const json& j);

json to_json(const PolyVec& v);
PolyVec polyvec_from_json(const json& j);

json to_json(const FlagType& ft);
FlagType flagtype_from_json(const json& j);

json to_json(const MeromorphicBundle& e); // {"n", "frame": [columns]}
MeromorphicBundle bundle_from_json(const json& j);

json to_json(const HoloFlag& flag);
HoloFlag flag_from_json(const json& j);

json to_json(const LaurentVec& v);
LaurentVec laurent_from_json(int n, const json& j);

json to_json(const GradedModel& w);
GradedModel model_from_json(const json& j);

json to_json(const VerificationReport& report);

json orbit_set_json(const CanonicalSet& set); // quotiented set with annotations

} // namespace unitons
