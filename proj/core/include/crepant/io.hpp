#pragma once

// JSON interchange: polytopes {"ambient_dim", "vertices"}, parameter
// matrices {"d", "rows"}, cones {"generators"}, triangulations {"points",
// "simplices", "heights", "flags"}. Output is canonical: object keys
// sorted, point lists sorted, heights as exact fraction strings.

#include <json.hpp>

#include "crepant/cones.hpp"
#include "crepant/ehrhart.hpp"
#include "crepant/triangulation.hpp"

namespace crepant {

using Json = nlohmann::json;

Json to_json(const LatticePolytope& p);
LatticePolytope polytope_from_json(const Json& j);

Json to_json(const ParamSequence& m);
ParamSequence sequence_from_json(const Json& j);

Json to_json(const RationalCone& c);
RationalCone cone_from_json(const Json& j);

/// Canonicalized: points sorted lexicographically, simplex index lists
/// remapped and sorted.
Json to_json(const CertifiedTriangulation& t);
CertifiedTriangulation triangulation_from_json(const Json& j);

Json to_json(const EhrhartData& e);
Json to_json(const CohomologyProfile& c);

Json int_vec_to_json(const IntVec& v);
IntVec int_vec_from_json(const Json& j);

}  // namespace crepant
