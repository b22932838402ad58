#pragma once

#include <span>

#include "hypercat/common.hpp"
#include "hypercat/typevec.hpp"

namespace hypercat {

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
/// parts[0] + parts[1] + ... choose parts, as a product of binomials.
BigInt multinomial(std::span<const unsigned> parts);

/// Number of subdivisions of a roofed polygon of type m:
///   (2m2 + 3m3 + ...)! / ((1 + m2 + 2m3 + ...)! m2! m3! ...)
BigInt hyperCatalan(const TypeVec& m);

/// Coefficient of t^m in S^r:
///   r (r - 1 + 2m2 + 3m3 + ...)! / ((r + m2 + 2m3 + ...)! m2! m3! ...)
/// Throws DomainError for r == 0.
BigInt fussCatalanPower(const TypeVec& m, unsigned r);

/// Ways to divide a roofed polygon into m copies of the (k+1)-gon.
BigInt fussNumber(unsigned k, unsigned m);

/// Geode coefficient G[m, n] (triangles and quadrilaterals only):
///   (2m + 3n + 3)! / ((2m + 2n + 3)(m + n + 1)(m + 2n + 2)! m! n!)
BigInt geodeBiTriClosed(unsigned m, unsigned n);

/// Geode coefficient at m copies of gon k plus n copies of gon k+1:
///   (km + (k+1)(n+1))! / ((k(m+n+1) + 1)(m+n+1)((k-1)m + k(n+1))! m! n!)
/// Evaluated straight from the formula so it can check the recurrence.
BigInt geodeConsecutiveClosed(unsigned k, unsigned m, unsigned n);

}  // namespace hypercat
