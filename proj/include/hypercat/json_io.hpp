#pragma once

#include <json.hpp>

#include "hypercat/recurrence.hpp"
#include "hypercat/series.hpp"
#include "hypercat/typevec.hpp"

namespace hypercat {

/// Array of naturals starting at m2, trailing zeros dropped.
nlohmann::json toJson(const TypeVec& m);
/// Accepts an array of naturals; throws ParseError otherwise.
TypeVec typeVecFromJson(const nlohmann::json& j);

/// [{"type": [...], "coeff": "<decimal>"}, ...] sorted by (faces, lex).
/// Coefficients are strings so consumers never overflow.
nlohmann::json toJson(const PolySeries& p);
nlohmann::json toJson(const SignedCombination& combo);

/// Inverse of toJson(PolySeries); terms outside trunc are rejected.
PolySeries seriesFromJson(const nlohmann::json& j, Truncation trunc);

}  // namespace hypercat
