#include "hypercat/identities.hpp"

#include <string>

#include "hypercat/closed_form.hpp"

namespace hypercat {

BigInt generalizedBinomial(const BigInt& top, unsigned i) {
  BigInt num = 1;
  for (unsigned j = 0; j < i; ++j) num *= top - j;
  return num / factorial(i);
}

namespace {

// scale * sum_{i=0..k} (-1)^i binom(a, i) binom(b, k-i) / ((i+1) binom(c, i+1))
BigRat alternatingQuotientSum(const BigInt& scale, const BigInt& a, const BigInt& b, const BigInt& c, unsigned k) {
  BigRat sum = 0;
  for (unsigned i = 0; i <= k; ++i) {
    BigInt den = generalizedBinomial(c, i + 1) * (i + 1);
    if (den == 0) throw DegenerateTerm("summand " + std::to_string(i) + " divides by a zero binomial");
    BigRat term(generalizedBinomial(a, i) * generalizedBinomial(b, k - i), den);
    if (i % 2) sum -= term;
    else sum += term;
  }
  return sum * scale;
}

}  // namespace

IdentitySides binomialFamily(unsigned n, unsigned k, long t, bool exploratory) {
  if (k > n) throw DomainError("binomialFamily requires k <= n");
  if (t < 1 && !exploratory) throw DomainError("binomialFamily requires t >= 1 outside exploratory mode");
  const BigInt bt = t;
  const BigInt bn = n;
  const BigInt scale = bt + 1 + bt * bn;
  return {BigRat(binomial(n, k)),
          alternatingQuotientSum(scale, bt + (bt - 1) * bn + k, bn + 1, scale + k, k)};
}

bool binomialFamilyCheck(unsigned n, unsigned k, long t, bool exploratory) {
  return binomialFamily(n, k, t, exploratory).holds();
}

IdentitySides unusualIdentity(unsigned s, unsigned n) {
  if (n > s) throw DomainError("unusualIdentity requires n <= s");
  const BigInt bs = s;
  return {BigRat(binomial(s, n)), alternatingQuotientSum(3 + 2 * bs, 2 + bs + n, bs + 1, 3 + 2 * bs + n, n)};
}

bool unusualIdentityCheck(unsigned s, unsigned n) { return unusualIdentity(s, n).holds(); }

}  // namespace hypercat
