#include "hypercat/typevec.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "hypercat/common.hpp"

namespace hypercat {

namespace {

void checkGon(unsigned gon) {
  if (gon < 2) throw DomainError("gon index must be >= 2, got " + std::to_string(gon));
}

}  // namespace

TypeVec TypeVec::fromDense(std::span<const unsigned> dense) {
  TypeVec m;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) m.entries_.push_back({static_cast<unsigned>(i + 2), dense[i]});
  }
  return m;
}

TypeVec TypeVec::fromDense(std::initializer_list<unsigned> dense) {
  return fromDense(std::span<const unsigned>(dense.begin(), dense.size()));
}

TypeVec TypeVec::basis(unsigned gon, unsigned mult) {
  checkGon(gon);
  TypeVec m;
  if (mult != 0) m.entries_.push_back({gon, mult});
  return m;
}

TypeVec TypeVec::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw ParseError("unbalanced bracket in type vector '" + std::string(text) + "'");
    body = trim(body.substr(1, body.size() - 2));
  }
  std::vector<unsigned> dense;
  if (body.empty()) return TypeVec{};
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = body.find(',', pos);
    std::string_view field = trim(body.substr(pos, comma == std::string_view::npos ? body.npos : comma - pos));
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw ParseError("bad component '" + std::string(field) + "' in type vector '" + std::string(text) + "'");
    }
    dense.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return fromDense(dense);
}

unsigned TypeVec::operator[](unsigned gon) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), gon,
                             [](const Entry& e, unsigned g) { return e.gon < g; });
  return (it != entries_.end() && it->gon == gon) ? it->mult : 0;
}

std::vector<unsigned> TypeVec::dense() const {
  std::vector<unsigned> out(entries_.empty() ? 0 : maxGon() - 1, 0);
  for (const auto& e : entries_) out[e.gon - 2] = e.mult;
  return out;
}

std::string TypeVec::str() const {
  std::string s = "[";
  auto d = dense();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(d[i]);
  }
  return s + "]";
}

TypeVec TypeVec::withAdjusted(unsigned gon, int delta) const {
  checkGon(gon);
  TypeVec out = *this;
  auto it = std::lower_bound(out.entries_.begin(), out.entries_.end(), gon,
                             [](const Entry& e, unsigned g) { return e.gon < g; });
  long current = (it != out.entries_.end() && it->gon == gon) ? it->mult : 0;
  long next = current + delta;
  if (next < 0) {
    throw DomainError("component " + std::to_string(gon) + " of " + str() + " would become negative");
  }
  if (current == 0) {
    if (next != 0) out.entries_.insert(it, {gon, static_cast<unsigned>(next)});
  } else if (next == 0) {
    out.entries_.erase(it);
  } else {
    it->mult = static_cast<unsigned>(next);
  }
  return out;
}

TypeVec& TypeVec::operator+=(const TypeVec& other) {
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->gon < b->gon)) {
      merged.push_back(*a++);
    } else if (a == entries_.end() || b->gon < a->gon) {
      merged.push_back(*b++);
    } else {
      merged.push_back({a->gon, a->mult + b->mult});
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
  return *this;
}

TypeVec TypeVec::scaled(unsigned factor) const {
  if (factor == 0) return TypeVec{};
  TypeVec out = *this;
  for (auto& e : out.entries_) e.mult *= factor;
  return out;
}

bool TypeVec::dominates(const TypeVec& other) const {
  return std::all_of(other.entries_.begin(), other.entries_.end(),
                     [this](const Entry& e) { return (*this)[e.gon] >= e.mult; });
}

TypeVec TypeVec::minus(const TypeVec& other) const {
  if (!dominates(other)) throw DomainError(other.str() + " is not contained in " + str());
  TypeVec out;
  for (const auto& e : entries_) {
    unsigned rest = e.mult - other[e.gon];
    if (rest) out.entries_.push_back({e.gon, rest});
  }
  return out;
}

std::strong_ordering lexCompare(const TypeVec& a, const TypeVec& b) {
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  auto ia = ea.begin();
  auto ib = eb.begin();
  while (ia != ea.end() || ib != eb.end()) {
    unsigned ga = ia != ea.end() ? ia->gon : ~0u;
    unsigned gb = ib != eb.end() ? ib->gon : ~0u;
    unsigned gon = std::min(ga, gb);
    unsigned va = ga == gon ? ia->mult : 0;
    unsigned vb = gb == gon ? ib->mult : 0;
    if (va != vb) return va <=> vb;
    if (ga == gon) ++ia;
    if (gb == gon) ++ib;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const TypeVec& a, const TypeVec& b) {
  if (auto c = faces(a) <=> faces(b); c != 0) return c;
  return lexCompare(a, b);
}

unsigned faces(const TypeVec& m) {
  unsigned n = 0;
  for (const auto& e : m.entries()) n += e.mult;
  return n;
}

unsigned edges(const TypeVec& m) {
  unsigned n = 1;
  for (const auto& e : m.entries()) n += e.gon * e.mult;
  return n;
}

unsigned vertices(const TypeVec& m) {
  unsigned n = 2;
  for (const auto& e : m.entries()) n += (e.gon - 1) * e.mult;
  return n;
}

unsigned distinctShapes(const TypeVec& m) { return static_cast<unsigned>(m.entries().size()); }

std::vector<std::pair<unsigned, TypeVec>> lessers(const TypeVec& m) {
  std::vector<std::pair<unsigned, TypeVec>> out;
  out.reserve(m.entries().size());
  for (const auto& e : m.entries()) out.emplace_back(e.gon, m.withAdjusted(e.gon, -1));
  return out;
}

TypeVec addBasis(const TypeVec& m, unsigned j) { return m.withAdjusted(j, +1); }

TypeVec subBasis(const TypeVec& m, unsigned j) {
  if (m[j] == 0) throw DomainError("subBasis: component " + std::to_string(j) + " of " + m.str() + " is zero");
  return m.withAdjusted(j, -1);
}

}  // namespace hypercat
