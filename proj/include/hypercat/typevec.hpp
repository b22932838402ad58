#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hypercat {

/// Exponent vector m = [m2, m3, m4, ...] counting the faces of each shape in a
/// subdivided polygon: m_k faces are (k+1)-gons and carry the variable t_k.
///
/// Storage is sparse and canonical: entries are sorted by gon index and a zero
/// multiplicity is never stored, so [1,0,0] and [1] are the same value.
/// Ordering is graded: first by total face count, then lexicographically on the
/// dense vector starting at m2. Within one face level the greatest element is
/// therefore the monomial with the most t2's.
class TypeVec {
 public:
  struct Entry {
    unsigned gon;
    unsigned mult;
    bool operator==(const Entry&) const = default;
  };

  TypeVec() = default;

  /// dense[0] is m2, dense[1] is m3, and so on.
  static TypeVec fromDense(std::span<const unsigned> dense);
  static TypeVec fromDense(std::initializer_list<unsigned> dense);
  /// mult copies of the basis vector for gon index k.
  static TypeVec basis(unsigned gon, unsigned mult = 1);
  /// Accepts "m2,m3,...", optionally bracketed; "" and "[]" give the empty type.
  static TypeVec parse(std::string_view text);

  unsigned operator[](unsigned gon) const;
  bool empty() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }
  /// Largest gon index with a nonzero component, 0 for the empty type.
  unsigned maxGon() const { return entries_.empty() ? 0 : entries_.back().gon; }
  /// Dense components from m2 up to maxGon().
  std::vector<unsigned> dense() const;
  /// "[m2,m3,...]" with trailing zeros dropped.
  std::string str() const;

  /// Component j adjusted by delta; throws DomainError if it would go negative.
  TypeVec withAdjusted(unsigned gon, int delta) const;

  TypeVec& operator+=(const TypeVec& other);
  friend TypeVec operator+(TypeVec a, const TypeVec& b) { return a += b; }
  TypeVec scaled(unsigned factor) const;
  /// True when every component of other is <= the matching component here.
  bool dominates(const TypeVec& other) const;
  /// Componentwise difference; throws DomainError unless dominates(other).
  TypeVec minus(const TypeVec& other) const;

  friend bool operator==(const TypeVec&, const TypeVec&) = default;
  friend std::strong_ordering operator<=>(const TypeVec& a, const TypeVec& b);

 private:
  std::vector<Entry> entries_;
};

/// Dense lexicographic comparison starting at m2, ignoring face grading.
std::strong_ordering lexCompare(const TypeVec& a, const TypeVec& b);

unsigned faces(const TypeVec& m);
/// 1 + sum k*m_k
unsigned edges(const TypeVec& m);
/// 2 + sum (k-1)*m_k
unsigned vertices(const TypeVec& m);
unsigned distinctShapes(const TypeVec& m);

/// (j, m - j) for every nonzero component j, ascending in j.
std::vector<std::pair<unsigned, TypeVec>> lessers(const TypeVec& m);

TypeVec addBasis(const TypeVec& m, unsigned j);
/// Throws DomainError when m_j == 0.
TypeVec subBasis(const TypeVec& m, unsigned j);

}  // namespace hypercat
