#pragma once

// JSON reading and writing. Every number is an exact integer; rationals are
// strings "p/q" (or "p" when integral). Writers are canonical: fixed key
// order, compact, newline-terminated.

#include <string>
#include <string_view>

#include <json.hpp>

#include "toric/cpl.hpp"
#include "toric/danilov.hpp"
#include "toric/dichotomy.hpp"
#include "toric/fan.hpp"
#include "toric/multival.hpp"

namespace toric {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j);

/// Throws InvalidInput with the parser's diagnostics.
Json parse_json(std::string_view text);

Json int_json(const Int& z);
Json rat_json(const Rat& q);
Json to_json(const IntVector& v);
Json to_json(const RatVector& v);

Int int_from_json(const Json& j);
Rat rat_from_json(const Json& j);
IntVector int_vector_from_json(const Json& j);
RatVector rat_vector_from_json(const Json& j);

/// {"rank", "rays", "maximal_cones", "labels"}; labels map to ray-index lists.
Json to_json(const Fan& fan);
Fan fan_from_json(const Json& j);

/// SHA-256 of the canonical fan serialization, lowercase hex.
std::string fan_hash(const Fan& fan);

/// {"rank", "basis": [["p/q", ...], ...]} with ambient rank implied by row length.
Json to_json(const Sublattice& lattice);
Sublattice sublattice_from_json(const Json& j);

Json to_json(const ValidationReport& report);
Json to_json(const FanStats& stats);
Json to_json(const CPLFunction& f);
Json to_json(const CPLSpace& space);
Json to_json(const NontrivialCPL& w);
Json to_json(const CountReport& report);
Json to_json(const FunctionalMultiset& s);
Json to_json(const MultivaluedCPL& f);
Json to_json(const ConsistencyReport& report);
Json to_json(const TrivialityResult& result);
Json to_json(const GradedPieceReport& report);
Json to_json(const WallIntersections& w);
/// The fan is needed for its hash and the maximal cones' ray indices.
Json to_json(const H1Certificate& cert, const Fan& fan);
Json to_json(const SublatticeConstruction& s);
Json to_json(const DichotomyResult& result, const Fan& fan);

/// "a,b,c" with integer or "p/q" entries. Throws InvalidInput.
RatVector parse_degree(std::string_view text);

/// Ray indices "0,3" or coordinate tuples "(1,-1,-1),(1,-1,2)" matched after
/// primitivization. Throws InvalidInput.
RayIndices parse_ray_list(const Fan& fan, std::string_view text);

}  // namespace toric
