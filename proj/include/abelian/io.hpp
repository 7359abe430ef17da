#pragma once

#include "json.hpp"

#include "abelian/apparent.hpp"
#include "abelian/codes.hpp"
#include "abelian/construct.hpp"
#include "abelian/orbits.hpp"
#include "abelian/transform.hpp"

namespace abelian {

using nlohmann::json;

// {"dims":[...], "q":..., "reps":[[...],...]}
json to_json(const OrbitSet& D);
OrbitSet orbit_set_from_json(const json& j);

// {"dims":[...], "coeffs":[[i_1,...,i_s,value],...]}, values are raw field encodings
json to_json(const MultiPoly& f);
MultiPoly poly_from_json(const json& j, const FieldPtr& ctx);

// {"p":..., "m":..., "dims":[...], "defining_reps":[[...],...], "roots":[u_1,...]}
json to_json(const AbelianCode& C);
AbelianCode code_from_json(const json& j);

// support as q-orbit representatives: {"dims", "q", "support_reps"}
json to_json(const SupportHypermatrix& M);
SupportHypermatrix matrix_from_json(const json& j);

// [{"step", "support_reps", "delta", "m"}, ...]
json to_json(const MadTrace& t);
json to_json(const BchSpec& s);
json to_json(const Certificate& c);

}  // namespace abelian
