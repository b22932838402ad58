#include <doctest.h>

#include "hypercat/geode.hpp"
#include "hypercat/sequences.hpp"
#include "published_tables.hpp"

using namespace hypercat;

TEST_CASE("slice templates") {
  const auto s = SliceTemplate::parse("n,0,1");
  CHECK(s.instantiate(3) == TypeVec::fromDense({3, 0, 1}));
  CHECK(s.maxGon() == 4);
  CHECK(s.str() == "n,0,1");
  CHECK_THROWS_AS(SliceTemplate::parse("1,0"), ParseError);
  CHECK_THROWS_AS(SliceTemplate::parse("n,n"), ParseError);
  CHECK(standardSlices().size() == 7);
}

TEST_CASE("short slices") {
  CHECK(geodeSlice(SliceTemplate::parse("n,1"), 5) == std::vector<BigInt>{3, 16, 70, 288, 1155});
  CHECK(geodeSlice(SliceTemplate::parse("1,0,n"), 4) == std::vector<BigInt>{2, 23, 224, 2091});
  CHECK(geodeSlice(SliceTemplate::parse("0,0,1,n"), 3) == std::vector<BigInt>{4, 56, 684});
  const auto g = buildG({3, 3});
  CHECK_THROWS_AS(geodeSlice(SliceTemplate::parse("n,1"), 6, g), DomainError);
}

TEST_CASE("all published slices") {
  for (const auto& [pattern, values] : tables::slices()) {
    CAPTURE(pattern);
    CHECK(geodeSlice(SliceTemplate::parse(pattern), static_cast<unsigned>(values.size())) == values);
  }
}

TEST_CASE("projections of S") {
  CHECK(flatten(projectedSequence(ProjectionFamily::LittleSchroeder, ProjectionTarget::S, 5)) ==
        std::vector<BigInt>{1, 1, 3, 11, 45});
  // Riordan numbers
  CHECK(flatten(projectedSequence(ProjectionFamily::Riordan, ProjectionTarget::S, 8)) ==
        std::vector<BigInt>{1, 0, 1, 1, 3, 6, 15, 36});
  const auto cayley = projectedSequence(ProjectionFamily::Cayley, ProjectionTarget::S, 4);
  CHECK(cayley[3] == std::vector<BigInt>{5, 5, 1});
}

TEST_CASE("projections of G") {
  CHECK(flatten(projectedSequence(ProjectionFamily::LittleSchroeder, ProjectionTarget::G, 8)) ==
        tables::littleSchroederGeode());
  CHECK(flatten(projectedSequence(ProjectionFamily::Riordan, ProjectionTarget::G, 10)) == tables::riordanGeode());
  const auto cayley = projectedSequence(ProjectionFamily::Cayley, ProjectionTarget::G, 8);
  CHECK(cayley == tables::cayleyGeode());
}

TEST_CASE("named sequences and b-files") {
  CHECK(flatten(namedSequence("catalan", 6)) == std::vector<BigInt>{1, 1, 2, 5, 14, 42});
  CHECK(flatten(namedSequence("n,0,1", 3)) == std::vector<BigInt>{4, 23, 106});
  CHECK(flatten(namedSequence("riordan-geode", 4)) == std::vector<BigInt>{1, 0, 2, 3});
  CHECK_THROWS(namedSequence("fibonacci", 3));
  CHECK(formatBFile({4, 23, 106}) == "0 4\n1 23\n2 106\n");
}
