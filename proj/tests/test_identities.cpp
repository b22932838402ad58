#include <doctest.h>

#include "hypercat/closed_form.hpp"
#include "hypercat/identities.hpp"

using namespace hypercat;

TEST_CASE("generalized binomial") {
  CHECK(generalizedBinomial(5, 2) == 10);
  CHECK(generalizedBinomial(2, 5) == 0);
  CHECK(generalizedBinomial(-1, 3) == -1);
  CHECK(generalizedBinomial(-2, 2) == 3);
  CHECK(generalizedBinomial(7, 0) == 1);
}

TEST_CASE("worked examples") {
  const auto a = binomialFamily(4, 2, 1);
  CHECK(a.lhs == 6);
  CHECK(a.rhs == 6);
  const auto b = binomialFamily(4, 2, 100);
  CHECK(b.lhs == 6);
  CHECK(b.rhs == 6);
  for (unsigned n = 0; n <= 8; ++n) CHECK(binomialFamily(n, 0, 3).rhs == 1);
}

TEST_CASE("family sweep") {
  for (long t = 1; t <= 5; ++t)
    for (unsigned n = 0; n <= 12; ++n)
      for (unsigned k = 0; k <= n; ++k) CHECK(binomialFamilyCheck(n, k, t));
}

TEST_CASE("unusual identity is the t = 2 case") {
  CHECK(unusualIdentityCheck(4, 2));
  for (unsigned s = 0; s <= 12; ++s)
    for (unsigned n = 0; n <= s; ++n) {
      CHECK(unusualIdentityCheck(s, n));
      const auto u = unusualIdentity(s, n);
      const auto f = binomialFamily(s, n, 2);
      CHECK(u.lhs == f.lhs);
      CHECK(u.rhs == f.rhs);
    }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(binomialFamily(2, 3, 1), DomainError);
  CHECK_THROWS_AS(binomialFamily(4, 2, 0), DomainError);
  CHECK_THROWS_AS(unusualIdentity(2, 3), DomainError);
}

TEST_CASE("exploratory non-positive t") {
  // t = 0 makes the scale 1 and every bottom binomial binom(1 + k, i + 1)
  // nonzero, so the sum is defined; whether it holds is not asserted.
  CHECK_NOTHROW(binomialFamily(3, 1, 0, true));
  // t = -1, n = 0: c = 0, so binom(0 + k, 1) vanishes at k = 0.
  CHECK_THROWS_AS(binomialFamily(0, 0, -1, true), DegenerateTerm);
}
