#pragma once

#include <string>
#include <variant>

#include "json.hpp"

#include "freeconv/group_algebra.hpp"
#include "freeconv/models.hpp"
#include "freeconv/transforms.hpp"
#include "freeconv/triplets.hpp"

namespace freeconv {

using TripletVariant =
    std::variant<AddClassicalTriplet, AddFreeTriplet, MultClassicalTriplet, MultFreeTriplet>;
using ModelVariant = std::variant<HermitianModel, UnitaryModel>;

// Triplet schema: {"kind": "add-classical" | "add-free" | "mult-classical" |
// "mult-free", "drift": number, "gauss": number, "levy": [[location, weight], ...],
// "idempotent": positive integer or "inf" (mult-classical only), "haar": bool
// (mult-free only)}. For the multiplicative kinds "drift" is the angle of omega.
// Every malformed input throws std::invalid_argument.
TripletVariant triplet_from_json(const nlohmann::json& j);
TripletVariant triplet_from_string(const std::string& text);
nlohmann::json triplet_to_json(const TripletVariant& t);

// Model schema: {"kind": "hermitian" | "unitary", "N": int, ...} with either a
// "triplet" member (add-free resp. mult-free, routed through the matrix model
// maps) or raw fields: eta/gauss/levy for hermitian, y0/alpha/beta/levy/haar
// for unitary.
ModelVariant model_from_json(const nlohmann::json& j);
ModelVariant model_from_string(const std::string& text);

// {"order": K, "coeffs": [[re, im] x (K+1)]}
nlohmann::json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const nlohmann::json& j);

// {"order": K, "moments": [[re, im] x (K+1)]}, m_0 = 1
nlohmann::json moments_to_json(const MomentSequence& m);
MomentSequence moments_from_json(const nlohmann::json& j);

// [{"perm": [images...], "re": x, "im": y}, ...] over the support
nlohmann::json element_to_json(const GroupAlgebraElement& x);

}  // namespace freeconv
