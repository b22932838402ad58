#pragma once

#include "hypercat/common.hpp"

namespace hypercat {

/// Binomial with an arbitrary integer top, via the falling power top^(i) / i!.
/// Zero when 0 <= top < i.
BigInt generalizedBinomial(const BigInt& top, unsigned i);

/// Both sides of a binomial identity evaluated exactly.
struct IdentitySides {
  BigRat lhs;
  BigRat rhs;
  bool holds() const { return lhs == rhs; }
};

/// binom(n, k) against
///   (t+1+tn) sum_{i=0..k} (-1)^i binom(t+(t-1)n+k, i) binom(n+1, k-i)
///                         / ((i+1) binom(t+1+tn+k, i+1)).
/// Requires k <= n and t >= 1; t <= 0 is accepted only when exploratory is
/// set. Throws DegenerateTerm when a denominator binomial vanishes.
IdentitySides binomialFamily(unsigned n, unsigned k, long t, bool exploratory = false);
bool binomialFamilyCheck(unsigned n, unsigned k, long t, bool exploratory = false);

/// binom(s, n) against
///   (3+2s) sum_{i=0..n} (-1)^i binom(2+s+n, i) binom(s+1, n-i) / ((i+1) binom(3+2s+n, i+1)).
/// Requires n <= s.
IdentitySides unusualIdentity(unsigned s, unsigned n);
bool unusualIdentityCheck(unsigned s, unsigned n);

}  // namespace hypercat
