#include "hypercat/sequences.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hypercat/closed_form.hpp"
#include "hypercat/geode.hpp"

namespace hypercat {

SliceTemplate SliceTemplate::parse(std::string_view text) {
  std::string body;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '[' && ch != ']') body += ch;
  }
  SliceTemplate t;
  std::stringstream in(body);
  std::string field;
  int free = 0;
  while (std::getline(in, field, ',')) {
    if (field == "n") {
      t.slots_.push_back(std::nullopt);
      ++free;
    } else if (!field.empty() && std::all_of(field.begin(), field.end(), ::isdigit)) {
      t.slots_.push_back(static_cast<unsigned>(std::stoul(field)));
    } else {
      throw ParseError("bad slot '" + field + "' in slice template '" + std::string(text) + "'");
    }
  }
  if (free != 1) throw ParseError("slice template needs exactly one 'n' slot: '" + std::string(text) + "'");
  return t;
}

TypeVec SliceTemplate::instantiate(unsigned n) const {
  std::vector<unsigned> dense;
  for (const auto& slot : slots_) dense.push_back(slot.value_or(n));
  return TypeVec::fromDense(dense);
}

std::string SliceTemplate::str() const {
  std::string s;
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    if (i) s += ',';
    s += slots_[i] ? std::to_string(*slots_[i]) : std::string("n");
  }
  return s;
}

const std::vector<std::string>& standardSlices() {
  static const std::vector<std::string> slices{"n,1", "1,n", "n,2", "1,0,n", "0,1,n", "n,0,1", "0,0,1,n"};
  return slices;
}

std::vector<BigInt> geodeSlice(const SliceTemplate& pattern, unsigned count) {
  if (count == 0) return {};
  const unsigned maxFaces = faces(pattern.instantiate(count - 1));
  const PolySeries g = buildG({maxFaces + 1, std::max(2u, pattern.maxGon())});
  return geodeSlice(pattern, count, g);
}

std::vector<BigInt> geodeSlice(const SliceTemplate& pattern, unsigned count, const PolySeries& g) {
  std::vector<BigInt> out;
  for (unsigned n = 0; n < count; ++n) {
    const TypeVec m = pattern.instantiate(n);
    if (!g.truncation().inside(m)) {
      throw DomainError("truncation too small for slice " + pattern.str() + " at n=" + std::to_string(n));
    }
    out.push_back(g.coeff(m));
  }
  return out;
}

CoefficientTable projectedSequence(ProjectionFamily family, ProjectionTarget target, unsigned count) {
  if (count == 0) return {};
  const unsigned top = count - 1;  // highest outer degree requested
  // Every t_k has outer weight >= 1 (>= 2 for Riordan), which bounds faces and gons.
  Truncation trunc = family == ProjectionFamily::Riordan ? Truncation{top / 2, std::max(2u, top)}
                                                         : Truncation{top, std::max(2u, top + 1)};
  const PolySeries series = target == ProjectionTarget::S ? buildS(trunc)
                                                          : buildG({trunc.maxFaces + 1, trunc.maxGon});
  SubstitutionRule rule;
  for (unsigned k = 2; k <= trunc.maxGon; ++k) {
    if (family == ProjectionFamily::Riordan) rule[k] = {1, k, 0};
    else rule[k] = {1, k - 1, family == ProjectionFamily::Cayley ? 1u : 0u};
  }
  const BivariatePoly poly = substituteMonomial(series, rule);
  auto at = [&](unsigned v, unsigned f) {
    auto it = poly.find({v, f});
    return it == poly.end() ? BigInt(0) : it->second;
  };
  CoefficientTable table(count);
  for (unsigned w = 0; w < count; ++w) {
    if (family != ProjectionFamily::Cayley) {
      table[w] = {at(w, 0)};
    } else if (w == 0) {
      table[w] = {at(0, 0)};
    } else {
      for (unsigned f = w; f >= 1; --f) table[w].push_back(at(w, f));
    }
  }
  return table;
}

CoefficientTable namedSequence(const std::string& name, unsigned count) {
  struct Projection {
    const char* name;
    ProjectionFamily family;
    ProjectionTarget target;
  };
  static const Projection projections[] = {
      {"little-schroeder", ProjectionFamily::LittleSchroeder, ProjectionTarget::S},
      {"little-schroeder-geode", ProjectionFamily::LittleSchroeder, ProjectionTarget::G},
      {"riordan", ProjectionFamily::Riordan, ProjectionTarget::S},
      {"riordan-geode", ProjectionFamily::Riordan, ProjectionTarget::G},
      {"cayley", ProjectionFamily::Cayley, ProjectionTarget::S},
      {"cayley-geode", ProjectionFamily::Cayley, ProjectionTarget::G},
  };
  for (const auto& p : projections) {
    if (name == p.name) return projectedSequence(p.family, p.target, count);
  }
  CoefficientTable table;
  if (name == "catalan") {
    for (unsigned n = 0; n < count; ++n) table.push_back({fussNumber(2, n)});
    return table;
  }
  for (auto& v : geodeSlice(SliceTemplate::parse(name), count)) table.push_back({std::move(v)});
  return table;
}

std::vector<BigInt> flatten(const CoefficientTable& table) {
  std::vector<BigInt> out;
  for (const auto& row : table) out.insert(out.end(), row.begin(), row.end());
  return out;
}

std::string formatBFile(const std::vector<BigInt>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += std::to_string(i) + " " + values[i].str() + "\n";
  return out;
}

}  // namespace hypercat
