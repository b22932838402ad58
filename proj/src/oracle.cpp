#include "hypercat/oracle.hpp"

#include <algorithm>
#include <functional>

namespace hypercat {

namespace {

// Calls visit(parts) for every way to write total as an ordered sum of
// `slots` natural numbers.
void forEachComposition(unsigned total, unsigned slots, const std::function<void(const std::vector<unsigned>&)>& visit) {
  std::vector<unsigned> parts(slots, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned idx, unsigned left) {
    if (idx + 1 == slots) {
      parts[idx] = left;
      visit(parts);
      return;
    }
    for (unsigned c = 0; c <= left; ++c) {
      parts[idx] = c;
      rec(idx + 1, left - c);
    }
  };
  rec(0, total);
}

using CountMap = std::map<TypeVec, BigInt>;

}  // namespace

Subdigon Subdigon::node(unsigned k, std::vector<Subdigon> children) {
  if (k < 2) throw DomainError("a subdigon node needs arity >= 2");
  if (children.size() != k) throw DomainError("a node of arity k needs exactly k children");
  Subdigon s;
  s.arity_ = k;
  s.children_ = std::move(children);
  return s;
}

TypeVec accountingType(const Subdigon& s) {
  if (s.isLeaf()) return TypeVec{};
  TypeVec m = TypeVec::basis(s.arity());
  for (const auto& child : s.children()) m += accountingType(child);
  return m;
}

namespace {

// byFaces[n] holds every subdigon with n nodes, for n = 0..faces.
std::vector<std::vector<Subdigon>> generateLevels(unsigned faces, unsigned maxGon) {
  std::vector<std::vector<Subdigon>> byFaces{{Subdigon::leaf()}};
  for (unsigned n = 1; n <= faces; ++n) {
    std::vector<Subdigon> level;
    for (unsigned k = 2; k <= maxGon; ++k) {
      forEachComposition(n - 1, k, [&](const std::vector<unsigned>& split) {
        // cartesian product of byFaces[split[0]] x ... x byFaces[split[k-1]]
        std::vector<Subdigon> children(k);
        std::function<void(unsigned)> pick = [&](unsigned slot) {
          if (slot == k) {
            level.push_back(Subdigon::node(k, children));
            return;
          }
          for (const auto& child : byFaces[split[slot]]) {
            children[slot] = child;
            pick(slot + 1);
          }
        };
        pick(0);
      });
    }
    byFaces.push_back(std::move(level));
  }
  return byFaces;
}

}  // namespace

std::vector<Subdigon> generateSubdigons(unsigned faces, unsigned maxGon) {
  return std::move(generateLevels(faces, maxGon)[faces]);
}

std::map<TypeVec, BigInt> enumerateSubdigons(unsigned maxFaces, unsigned maxGon, unsigned explicitFaceLimit) {
  const auto trees = generateLevels(std::min(maxFaces, explicitFaceLimit), maxGon);
  std::vector<CountMap> levels;
  for (unsigned n = 0; n <= maxFaces; ++n) {
    CountMap counts;
    if (n < trees.size()) {
      for (const auto& s : trees[n]) counts[accountingType(s)] += 1;
    } else {
      for (unsigned k = 2; k <= maxGon; ++k) {
        forEachComposition(n - 1, k, [&](const std::vector<unsigned>& split) {
          CountMap product{{TypeVec::basis(k), 1}};
          for (unsigned part : split) {
            CountMap next;
            for (const auto& [a, ca] : product) {
              for (const auto& [b, cb] : levels[part]) next[a + b] += ca * cb;
            }
            product = std::move(next);
          }
          for (const auto& [m, c] : product) counts[m] += c;
        });
      }
    }
    levels.push_back(std::move(counts));
  }
  CountMap all;
  for (const auto& level : levels) all.insert(level.begin(), level.end());
  return all;
}

}  // namespace hypercat
