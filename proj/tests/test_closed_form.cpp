#include <doctest.h>

#include "hypercat/closed_form.hpp"
#include "hypercat/oracle.hpp"

using namespace hypercat;

namespace {
// Plain Catalan numbers by the convolution C_{n+1} = sum C_i C_{n-i}.
std::vector<BigInt> catalans(unsigned n) {
  std::vector<BigInt> c{1};
  for (unsigned k = 0; k < n; ++k) {
    BigInt s = 0;
    for (unsigned i = 0; i <= k; ++i) s += c[i] * c[k - i];
    c.push_back(s);
  }
  return c;
}
}  // namespace

TEST_CASE("small factorials and binomials") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(2, 5) == 0);
  const unsigned parts[] = {2, 1, 1};
  CHECK(multinomial(parts) == 12);
}

TEST_CASE("hyper-Catalan spot values") {
  CHECK(hyperCatalan(TypeVec{}) == 1);
  CHECK(hyperCatalan(TypeVec::fromDense({1, 1})) == 5);
  CHECK(hyperCatalan(TypeVec::fromDense({1, 0, 2})) == 45);
  CHECK(hyperCatalan(TypeVec::fromDense({0, 0, 2})) == 4);
  CHECK(hyperCatalan(TypeVec::fromDense({2, 1, 1})) == 495);
  CHECK(hyperCatalan(TypeVec::fromDense({3, 0, 1})) == 120);
  CHECK(hyperCatalan(TypeVec::fromDense({3, 1})) == 84);
  CHECK(hyperCatalan(TypeVec::fromDense({4})) == 14);
}

TEST_CASE("triangulations give Catalan numbers") {
  const auto c = catalans(20);
  for (unsigned n = 0; n <= 20; ++n) CHECK(hyperCatalan(TypeVec::basis(2, n)) == c[n]);
}

TEST_CASE("powers of S") {
  const auto m = TypeVec::fromDense({1, 0, 2});
  CHECK(fussCatalanPower(m, 1) == hyperCatalan(m));
  CHECK(fussCatalanPower(m, 3) == 198);
  CHECK(fussCatalanPower(TypeVec::fromDense({1}), 2) == 2);
  CHECK(fussCatalanPower(TypeVec{}, 4) == 1);
}

TEST_CASE("Fuss numbers") {
  CHECK(fussNumber(2, 3) == 5);
  CHECK(fussNumber(3, 2) == 3);
  CHECK(fussNumber(4, 1) == 1);
  // (k-1)-ary trees: binom(k m, m) / ((k-1) m + 1)
  for (unsigned k = 2; k <= 6; ++k)
    for (unsigned m = 0; m <= 8; ++m) CHECK(fussNumber(k, m) == binomial(k * m, m) / ((k - 1) * m + 1));
}

TEST_CASE("closed Geode forms for two shapes") {
  CHECK(geodeBiTriClosed(1, 0) == 2);
  CHECK(geodeBiTriClosed(1, 1) == 16);
  CHECK(geodeBiTriClosed(0, 1) == 3);
  for (unsigned m = 0; m <= 6; ++m)
    for (unsigned n = 0; n <= 6; ++n) CHECK(geodeConsecutiveClosed(2, m, n) == geodeBiTriClosed(m, n));
  CHECK(geodeConsecutiveClosed(3, 0, 1) == 4);
  CHECK(geodeConsecutiveClosed(3, 1, 1) == 33);
}
