#include "hypercat/json_io.hpp"

namespace hypercat {

namespace {

template <class Map>
nlohmann::json termList(const Map& terms) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : terms) out.push_back({{"type", toJson(m)}, {"coeff", c.str()}});
  return out;
}

}  // namespace

nlohmann::json toJson(const TypeVec& m) {
  nlohmann::json out = nlohmann::json::array();
  for (unsigned v : m.dense()) out.push_back(v);
  return out;
}

TypeVec typeVecFromJson(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("type vector JSON must be an array");
  std::vector<unsigned> dense;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) throw ParseError("type vector components must be naturals");
    dense.push_back(v.get<unsigned>());
  }
  return TypeVec::fromDense(dense);
}

nlohmann::json toJson(const PolySeries& p) { return termList(p.terms()); }

nlohmann::json toJson(const SignedCombination& combo) { return termList(combo); }

PolySeries seriesFromJson(const nlohmann::json& j, Truncation trunc) {
  if (!j.is_array()) throw ParseError("series JSON must be an array of terms");
  PolySeries p(trunc);
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("type") || !term.contains("coeff") || !term["coeff"].is_string()) {
      throw ParseError("series term needs 'type' and string 'coeff'");
    }
    TypeVec m = typeVecFromJson(term["type"]);
    if (!trunc.inside(m)) throw ParseError("series term " + m.str() + " lies outside the truncation");
    BigInt c;
    try {
      c = BigInt(term["coeff"].get<std::string>());
    } catch (const std::exception&) {
      throw ParseError("bad coefficient '" + term["coeff"].get<std::string>() + "'");
    }
    p.addTerm(m, c);
  }
  return p;
}

}  // namespace hypercat
