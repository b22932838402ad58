#include <doctest.h>

#include <set>

#include "hypercat/closed_form.hpp"
#include "hypercat/oracle.hpp"
#include "hypercat/series.hpp"

using namespace hypercat;

namespace {
TypeVec tv(std::initializer_list<unsigned> d) { return TypeVec::fromDense(d); }
}  // namespace

TEST_CASE("accounting types") {
  CHECK(accountingType(Subdigon::leaf()).empty());
  const auto tri = Subdigon::node(2, {Subdigon::leaf(), Subdigon::leaf()});
  CHECK(accountingType(tri) == tv({1}));
  const auto quad = Subdigon::node(3, {Subdigon::leaf(), Subdigon::leaf(), Subdigon::leaf()});
  CHECK(accountingType(Subdigon::node(2, {quad, Subdigon::leaf()})) == tv({1, 1}));
  CHECK_THROWS_AS(Subdigon::node(3, {Subdigon::leaf()}), DomainError);
  CHECK_THROWS_AS(Subdigon::node(1, {Subdigon::leaf()}), DomainError);
}

TEST_CASE("explicit trees are distinct and typed correctly") {
  for (unsigned f = 0; f <= 4; ++f) {
    const auto trees = generateSubdigons(f, 4);
    std::map<TypeVec, BigInt> counts;
    for (std::size_t i = 0; i < trees.size(); ++i) {
      const auto m = accountingType(trees[i]);
      CHECK(faces(m) == f);
      ++counts[m];
      for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(trees[i] == trees[j]);
    }
    for (const auto& [m, c] : counts) CHECK(c == hyperCatalan(m));
  }
}

TEST_CASE("enumeration counts") {
  const auto counts = enumerateSubdigons(5, 5);
  CHECK(counts.at(TypeVec{}) == 1);
  CHECK(counts.at(tv({2})) == 2);
  CHECK(counts.at(tv({1, 1})) == 5);
  CHECK(counts.size() == insideTypes({5, 5}).size());
  for (const auto& m : insideTypes({5, 5})) CHECK(counts.at(m) == hyperCatalan(m));
}

TEST_CASE("explicit limit does not change counts") {
  CHECK(enumerateSubdigons(5, 4, 2) == enumerateSubdigons(5, 4, 5));
}
