#include "hypercat/geode.hpp"

#include <numeric>

#include "hypercat/closed_form.hpp"
#include "hypercat/recurrence.hpp"

namespace hypercat {

namespace {

void requireNatural(const PolySeries& p, const char* name) {
  for (const auto& [m, c] : p.terms()) {
    if (c < 0) throw IntegrityError(std::string(name) + " has negative coefficient at " + m.str());
  }
}

std::vector<BigInt> fCoefficients(const PolySeries& g, const std::vector<BigInt>& weights, unsigned maxDegree) {
  SubstitutionRule rule;
  for (std::size_t i = 0; i < weights.size(); ++i) rule[static_cast<unsigned>(i + 2)] = {weights[i], 0, 1};
  std::vector<BigInt> out(maxDegree + 1, 0);
  for (const auto& [exps, c] : substituteMonomial(g, rule)) {
    if (exps.second <= maxDegree) out[exps.second] = c;
  }
  return out;
}

}  // namespace

PolySeries buildG(Truncation trunc) {
  if (trunc.maxFaces < 1) throw DomainError("buildG requires maxFaces >= 1");
  PolySeries s = buildS(trunc);
  s -= PolySeries::constant(trunc, 1);
  return divideByS1(s);
}

PolySeries buildU(Truncation trunc) {
  PolySeries u = sub(PolySeries::constant(trunc, 1), inverse(buildS(trunc)));
  requireNatural(u, "U");
  return u;
}

PolySeries buildH(Truncation trunc) {
  if (trunc.maxFaces < 1) throw DomainError("buildH requires maxFaces >= 1");
  PolySeries h = divideByS1(buildU(trunc));
  requireNatural(h, "H");
  return h;
}

PolySeries geodeHInverseDirect(const PolySeries& s) {
  const Truncation trunc = s.truncation();
  PolySeries out = PolySeries::constant(trunc, 1);
  PolySeries powerSum(trunc);  // S + S^2 + ... + S^(n-1)
  PolySeries power = PolySeries::constant(trunc, 1);
  for (unsigned n = 2; n <= trunc.maxGon; ++n) {
    power = mul(power, s);
    powerSum += power;
    out -= shift(powerSum, TypeVec::basis(n));
  }
  return out;
}

std::vector<BigInt> alternatingGeodeEval(unsigned kPairs, unsigned maxDegree) {
  if (kPairs < 1) throw DomainError("alternatingGeodeEval needs at least one pair");
  std::vector<BigInt> weights;
  for (unsigned i = 0; i < kPairs; ++i) {
    weights.push_back(-1);
    weights.push_back(1);
  }
  const PolySeries g = buildG({maxDegree + 1, 2 * kPairs + 1});
  return fCoefficients(g, weights, maxDegree);
}

std::vector<BigInt> zeroSumGeodeEval(const std::vector<BigInt>& weights, unsigned maxDegree) {
  if (weights.empty()) throw DomainError("zeroSumGeodeEval needs at least one weight");
  BigInt sum = std::accumulate(weights.begin(), weights.end(), BigInt(0));
  if (sum != 0) throw DomainError("zeroSumGeodeEval weights must sum to zero");
  const unsigned maxGon = static_cast<unsigned>(weights.size()) + 1;
  const PolySeries g = buildG({maxDegree + 1, std::max(2u, maxGon)});
  return fCoefficients(g, weights, maxDegree);
}

std::vector<BigInt> geometricSeries(const BigInt& a, unsigned maxDegree) {
  std::vector<BigInt> out;
  BigInt p = 1;
  for (unsigned n = 0; n <= maxDegree; ++n) {
    out.push_back(p);
    p *= a;
  }
  return out;
}

std::optional<BigInt> geodeClosedFormValue(const TypeVec& m) {
  const auto& e = m.entries();
  if (e.empty()) return BigInt(1);
  if (e.size() == 1) return fussNumber(e[0].gon, e[0].mult + 1);
  if (e.size() != 2) return std::nullopt;
  if (e[1].gon == e[0].gon + 1) {
    if (e[0].gon == 2) return geodeBiTriClosed(e[0].mult, e[1].mult);
    return geodeConsecutiveClosed(e[0].gon, e[0].mult, e[1].mult);
  }
  return twoShapeAlternatingSum(e[0].gon, e[1].gon, e[0].mult, e[1].mult);
}

}  // namespace hypercat
