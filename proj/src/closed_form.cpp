#include "hypercat/closed_form.hpp"

#include <string>

namespace hypercat {

namespace {

// Every closed form here is a factorial quotient that must divide exactly; a
// remainder means the formula was transcribed wrong.
BigInt exactQuotient(const BigInt& num, const BigInt& den, const char* what) {
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw IntegrityError(std::string(what) + ": factorial quotient is not exact");
  return q;
}

}  // namespace

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt b = 1;
  for (unsigned i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;
  }
  return b;
}

BigInt multinomial(std::span<const unsigned> parts) {
  BigInt result = 1;
  unsigned total = 0;
  for (unsigned p : parts) {
    total += p;
    result *= binomial(total, p);
  }
  return result;
}

BigInt hyperCatalan(const TypeVec& m) { return fussCatalanPower(m, 1); }

BigInt fussCatalanPower(const TypeVec& m, unsigned r) {
  if (r == 0) throw DomainError("fussCatalanPower requires r >= 1");
  // E_m - 1 = sum k m_k and V_m - 2 = sum (k-1) m_k
  unsigned gonWeight = edges(m) - 1;
  unsigned vertexWeight = vertices(m) - 2;
  BigInt den = factorial(r + vertexWeight);
  for (const auto& e : m.entries()) den *= factorial(e.mult);
  BigInt num = factorial(r - 1 + gonWeight) * r;
  return exactQuotient(num, den, "fussCatalanPower");
}

BigInt fussNumber(unsigned k, unsigned m) { return hyperCatalan(TypeVec::basis(k, m)); }

BigInt geodeBiTriClosed(unsigned m, unsigned n) {
  BigInt den = factorial(m + 2 * n + 2) * factorial(m) * factorial(n);
  den *= (2 * m + 2 * n + 3);
  den *= (m + n + 1);
  return exactQuotient(factorial(2 * m + 3 * n + 3), den, "geodeBiTriClosed");
}

BigInt geodeConsecutiveClosed(unsigned k, unsigned m, unsigned n) {
  if (k < 2) throw DomainError("geodeConsecutiveClosed requires k >= 2");
  BigInt den = factorial((k - 1) * m + k * (n + 1)) * factorial(m) * factorial(n);
  den *= (k * (m + n + 1) + 1);
  den *= (m + n + 1);
  return exactQuotient(factorial(k * m + (k + 1) * (n + 1)), den, "geodeConsecutiveClosed");
}

}  // namespace hypercat
