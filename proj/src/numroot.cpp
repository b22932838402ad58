#include "hypercat/numroot.hpp"

#include <cmath>
#include <functional>

#include "hypercat/common.hpp"
#include "hypercat/typevec.hpp"

namespace hypercat {

namespace {

constexpr unsigned kTailWindow = 5;

bool nonDecreasingTail(const std::vector<double>& increments) {
  if (increments.size() < kTailWindow + 1) return false;
  for (std::size_t i = increments.size() - kTailWindow; i < increments.size(); ++i) {
    if (std::abs(increments[i]) < std::abs(increments[i - 1])) return false;
    if (increments[i] == 0.0) return false;
  }
  return true;
}

}  // namespace

SeriesEvaluation evaluateTruncatedS(std::span<const double> coeffs, unsigned levels) {
  // Only gons with a nonzero t can contribute.
  std::vector<unsigned> gons;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0.0) gons.push_back(static_cast<unsigned>(i + 2));
  }
  unsigned maxArg = levels * (gons.empty() ? 2 : gons.back()) + 2;
  std::vector<BigInt> fact(maxArg + 1, 1);
  for (unsigned i = 1; i <= maxArg; ++i) fact[i] = fact[i - 1] * i;

  SeriesEvaluation out;
  out.increments.assign(levels + 1, 0.0);
  out.increments[0] = 1.0;
  std::vector<unsigned> mult(gons.size(), 0);
  // Walk every multiplicity vector over `gons` with sum <= levels.
  std::function<void(std::size_t, unsigned, unsigned, unsigned, double)> walk =
      [&](std::size_t idx, unsigned used, unsigned gonWeight, unsigned vertexWeight, double power) {
        if (idx == gons.size()) {
          if (used == 0) return;
          BigInt den = fact[1 + vertexWeight];
          for (unsigned c : mult) den *= fact[c];
          BigInt hc = fact[gonWeight] / den;
          out.increments[used] += hc.convert_to<double>() * power;
          return;
        }
        const unsigned k = gons[idx];
        const double t = coeffs[k - 2];
        double p = power;
        for (unsigned c = 0; used + c <= levels; ++c) {
          mult[idx] = c;
          walk(idx + 1, used + c, gonWeight + k * c, vertexWeight + (k - 1) * c, p);
          p *= t;
        }
        mult[idx] = 0;
      };
  walk(0, 0, 0, 0, 1.0);

  for (double inc : out.increments) out.value += inc;
  out.divergenceSuspected = nonDecreasingTail(out.increments);
  return out;
}

double residualNorm(std::span<const double> coeffs, double alpha) {
  double sum = 1.0 - alpha;
  double power = alpha;
  for (double c : coeffs) {
    power *= alpha;
    sum += c * power;
  }
  return std::abs(sum);
}

}  // namespace hypercat
