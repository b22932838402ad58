#pragma once

#include <map>
#include <vector>

#include "hypercat/common.hpp"
#include "hypercat/typevec.hpp"

namespace hypercat {

/// A subdivided roofed polygon as a rooted plane tree. A leaf is the null
/// subdigon; a node of arity k is a central (k+1)-gon whose k non-roof sides
/// carry the child subdigons in counterclockwise order. Arity k corresponds to
/// the variable t_k.
class Subdigon {
 public:
  Subdigon() = default;  // the null subdigon
  static Subdigon leaf() { return Subdigon{}; }
  /// Throws DomainError unless children.size() == k and k >= 2.
  static Subdigon node(unsigned k, std::vector<Subdigon> children);

  bool isLeaf() const { return arity_ == 0; }
  unsigned arity() const { return arity_; }
  const std::vector<Subdigon>& children() const { return children_; }
  bool operator==(const Subdigon&) const = default;

 private:
  unsigned arity_ = 0;
  std::vector<Subdigon> children_;
};

/// Multiset of node arities: a node of arity k adds one to component m_k.
TypeVec accountingType(const Subdigon& s);

/// Every subdigon with exactly `faces` nodes and arities in 2..maxGon.
std::vector<Subdigon> generateSubdigons(unsigned faces, unsigned maxGon);

/// Number of subdigons of each type with at most maxFaces faces and arities
/// in 2..maxGon. Levels up to explicitFaceLimit are counted tree by tree;
/// larger levels are assembled from the per-level counts of the same
/// panelling recursion.
std::map<TypeVec, BigInt> enumerateSubdigons(unsigned maxFaces, unsigned maxGon, unsigned explicitFaceLimit = 4);

}  // namespace hypercat
