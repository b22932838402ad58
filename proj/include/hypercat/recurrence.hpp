#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypercat/common.hpp"
#include "hypercat/typevec.hpp"

namespace hypercat {

/// A way of writing a target type as sum k_n * n over distinct parts n with
/// multiplicities k_n >= 1. The empty part [] is allowed and often required.
struct VectorPartition {
  std::vector<std::pair<TypeVec, unsigned>> parts;

  unsigned partCount() const;
  TypeVec total() const;
  bool operator==(const VectorPartition&) const = default;
};

/// All vector partitions of m with exactly j parts (j >= 1), each listed once.
/// Parts appear in TypeVec order inside a partition; partitions are ordered
/// by their multiplicity vectors over the sub-types of m.
std::vector<VectorPartition> vectorPartitions(const TypeVec& m, unsigned j);

/// j! / prod k_n! for the partition's multiplicities.
BigInt multinomialOf(const VectorPartition& p);

/// sum over vectorPartitions(m, r) of multinomial * prod coeff(n)^k_n, i.e.
/// [t^m] of the r-th power of the series with coefficients coeff.
BigInt powerCoefficient(const TypeVec& m, unsigned r, const std::function<BigInt(const TypeVec&)>& coeff);

/// Memoized hyper-Catalan recurrence. One instance is one computation
/// session; it is not safe to share between threads.
class HyperCatalanRecurrence {
 public:
  BigInt operator()(const TypeVec& m);

 private:
  std::map<TypeVec, BigInt> memo_;
};

BigInt hyperCatalanRecurrence(const TypeVec& m);

/// Catalan_{m+1} == sum_{n=0..m} Catalan_n Catalan_{m-n} for every m <= maxM.
bool catalanConvolutionCheck(unsigned maxM);

/// Rule choosing the basis direction j in G_m = C_{m+j} - sum of other lessers.
class XStrategy {
 public:
  enum class Kind { ConstantIndex, LargestComponent };

  static XStrategy constantIndex(unsigned k);
  /// Index of the largest component, the smallest such index on ties.
  static XStrategy largestComponent() { return XStrategy(Kind::LargestComponent, 0); }
  /// "max" or a gon index such as "2".
  static XStrategy parse(const std::string& text);

  Kind kind() const { return kind_; }
  unsigned index() const { return index_; }
  unsigned choose(const TypeVec& m) const;
  std::string name() const;

 private:
  XStrategy(Kind kind, unsigned index) : kind_(kind), index_(index) {}
  Kind kind_;
  unsigned index_;
};

/// Signed multiplicities of hyper-Catalan numbers.
using SignedCombination = std::map<TypeVec, BigInt>;

BigInt evaluate(const SignedCombination& combo);

/// Memoized Geode recurrence for one strategy. G_[] = 1, and a single-shape
/// type m*k resolves directly to C((m+1)*k). Every other type expands along
/// the strategy's direction. Each fresh (non-memoized) expansion is counted
/// against the budget and NonTermination is thrown once it is exceeded.
class GeodeRecurrence {
 public:
  static constexpr std::size_t kDefaultBudget = 1'000'000;

  explicit GeodeRecurrence(XStrategy strategy, std::size_t budget = kDefaultBudget,
                           std::optional<unsigned> maxGon = std::nullopt);

  BigInt value(const TypeVec& m);
  SignedCombination expand(const TypeVec& m);
  std::size_t expansions() const { return expansions_; }

 private:
  unsigned direction(const TypeVec& m) const;
  void charge();

  XStrategy strategy_;
  std::size_t budget_;
  std::size_t expansions_ = 0;
  std::map<TypeVec, BigInt> values_;
  std::map<TypeVec, SignedCombination> combos_;
};

BigInt geodeRecurrenceValue(const TypeVec& m, XStrategy x);
SignedCombination geodeExpandToHyperCatalans(const TypeVec& m, XStrategy x);
/// One step along gon index `lead`, then every remaining Geode term is
/// expanded with the largest-component strategy.
SignedCombination geodeExpandLeading(const TypeVec& m, unsigned lead);

/// C_m == sum of geode(l) over the lessers l of m. Requires m != [].
bool lesserSumCheck(const TypeVec& m, const std::function<BigInt(const TypeVec&)>& geode);

/// sum_{i=0..n} (-1)^i C((m+1+i) j + (n-i) k), which equals G(m j + n k).
/// Requires j != k, both >= 2, and m, n >= 1.
BigInt twoShapeAlternatingSum(unsigned j, unsigned k, unsigned m, unsigned n);

}  // namespace hypercat
