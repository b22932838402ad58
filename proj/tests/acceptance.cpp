// Acceptance checks. Prints one [PASS]/[FAIL] line per criterion and exits
// nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"
#include "hypercat/closed_form.hpp"
#include "hypercat/geode.hpp"
#include "hypercat/identities.hpp"
#include "hypercat/numroot.hpp"
#include "hypercat/oracle.hpp"
#include "hypercat/recurrence.hpp"
#include "hypercat/sequences.hpp"
#include "hypercat/series.hpp"
#include "published_tables.hpp"

using namespace hypercat;

namespace {

TypeVec tv(std::initializer_list<unsigned> d) { return TypeVec::fromDense(d); }

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

Outcome closedFormSpots() {
  Outcome o;
  o.require(hyperCatalan(TypeVec{}) == 1, "C[]");
  o.require(hyperCatalan(tv({1, 1})) == 5, "C[1,1]");
  o.require(hyperCatalan(tv({1, 0, 2})) == 45, "C[1,0,2]");
  o.require(hyperCatalan(tv({0, 0, 2})) == 4, "C[0,0,2]");
  return o;
}

Outcome recurrenceMatches() {
  Outcome o;
  HyperCatalanRecurrence rec;
  const auto types = insideTypes({6, 5});
  for (const auto& m : types) o.require(rec(m) == hyperCatalan(m), m.str());
  if (o.ok) o.detail = std::to_string(types.size()) + " types";
  return o;
}

Outcome enumerationMatches() {
  Outcome o;
  const auto counts = enumerateSubdigons(5, 5);
  o.require(counts.size() == insideTypes({5, 5}).size(), "type coverage");
  for (const auto& [m, c] : counts) o.require(c == hyperCatalan(m), m.str());
  return o;
}

Outcome powersOfS() {
  Outcome o;
  const Truncation t{5, 5};
  const auto s = buildS(t);
  PolySeries power = PolySeries::constant(t, 1);
  for (unsigned r = 1; r <= 4; ++r) {
    power = mul(power, s);
    for (const auto& m : insideTypes(t))
      o.require(power.coeff(m) == fussCatalanPower(m, r), m.str() + " r=" + std::to_string(r));
  }
  const auto m = tv({1, 0, 2});
  o.require(fussCatalanPower(m, 3) == 198, "C^(3)[1,0,2]");
  std::vector<BigInt> contributions;
  for (const auto& p : vectorPartitions(m, 3)) {
    BigInt c = multinomialOf(p);
    for (const auto& [part, mult] : p.parts)
      for (unsigned i = 0; i < mult; ++i) c *= hyperCatalan(part);
    contributions.push_back(c);
  }
  o.require(contributions == std::vector<BigInt>{135, 36, 24, 3}, "four-partition decomposition");
  return o;
}

Outcome residualVanishes() {
  Outcome o;
  for (unsigned d = 0; d <= 7; ++d)
    for (unsigned k = 2; k <= 6; ++k)
      o.require(residualGeometric(buildS({d, k})).isZero(), "D=" + std::to_string(d) + " K=" + std::to_string(k));
  return o;
}

Outcome geodeRoutes() {
  Outcome o;
  const auto g = buildG({6, 5});
  GeodeRecurrence rec(XStrategy::largestComponent());
  std::size_t closed = 0;
  for (const auto& m : insideTypes({5, 5})) {
    o.require(rec.value(m) == g.coeff(m), "recurrence " + m.str());
    if (auto v = geodeClosedFormValue(m)) {
      ++closed;
      o.require(*v == g.coeff(m), "closed " + m.str());
    }
  }
  const auto big = buildG({7, 4});
  o.require(big.coeff(tv({1, 1, 1})) == 319, "G111");
  o.require(big.coeff(tv({1, 0, 1})) == 23, "G101");
  o.require(big.coeff(tv({2, 0, 2})) == 1549, "G202");
  o.require(big.coeff(tv({3, 0, 3})) == 145687, "G303");
  o.require(twoShapeAlternatingSum(2, 4, 3, 3) == 145687, "alternating G303");
  o.require(geodeRecurrenceValue(tv({3, 0, 3}), XStrategy::largestComponent()) == 145687, "recurrence G303");
  if (o.ok) o.detail = std::to_string(closed) + " types with a closed form";
  return o;
}

Outcome expansionGoldens() {
  Outcome o;
  const std::vector<std::pair<std::string, std::string>> golden{
      {"2", "+[2,1,1] -[3,0,1] -[3,1] +2[4] = 319\n"},
      {"3", "+[1,2,1] -[0,3,1] -[1,3] +2[0,4] = 319\n"},
      {"4", "+[1,1,2] -[0,1,3] -[1,0,3] +2[0,0,4] = 319\n"},
  };
  for (const auto& [k, expected] : golden) {
    std::ostringstream out, err;
    const int code = cli::run({"geode", "expand", "1,1,1", "--x", k}, out, err);
    o.require(code == 0 && out.str() == expected, "k=" + k + " printed " + out.str());
  }
  return o;
}

Outcome sequenceTables() {
  Outcome o;
  for (const auto& [pattern, values] : tables::slices())
    o.require(geodeSlice(SliceTemplate::parse(pattern), static_cast<unsigned>(values.size())) == values, pattern);
  o.require(flatten(projectedSequence(ProjectionFamily::LittleSchroeder, ProjectionTarget::G, 8)) ==
                tables::littleSchroederGeode(),
            "little Schroeder Geode");
  o.require(flatten(projectedSequence(ProjectionFamily::Riordan, ProjectionTarget::G, 10)) == tables::riordanGeode(),
            "Riordan Geode");
  o.require(projectedSequence(ProjectionFamily::Cayley, ProjectionTarget::G, 8) == tables::cayleyGeode(),
            "Cayley Geode");
  return o;
}

Outcome gesselSuite() {
  Outcome o;
  const Truncation t6{6, 7};
  const auto u = buildU(t6);
  const auto h6 = buildH({7, 7});
  for (const auto& [m, c] : u.terms()) o.require(c >= 0, "U " + m.str());
  for (const auto& [m, c] : h6.terms()) o.require(c >= 0, "H " + m.str());
  const auto s = buildS({7, 7});
  o.require(mul(h6, s.retruncated(h6.truncation())) == buildG({7, 7}), "H S = G");
  o.require(mul(PolySeries::faceOne({7, 7}), h6.retruncated({7, 7})) == buildU({7, 7}), "H S1 = U");

  const auto h = buildH({8, 8});
  for (unsigned w = 0; w < tables::hVertexLayers().size(); ++w) {
    PolySeries expected(h.truncation());
    for (const auto& [dense, c] : tables::hVertexLayers()[w])
      expected.addTerm(TypeVec::fromDense(std::span<const unsigned>(dense)), c);
    PolySeries actual(h.truncation());
    for (const auto& [m, c] : h.terms())
      if (vertices(m) - 2 == w) actual.addTerm(m, c);
    o.require(actual == expected, "H v^" + std::to_string(w));
  }
  for (unsigned k = 1; k <= 3; ++k)
    o.require(alternatingGeodeEval(k, 8) == geometricSeries(k, 8), "alternating k=" + std::to_string(k));
  o.require(zeroSumGeodeEval({1, -1}, 8) == geometricSeries(-1, 8), "zero-sum (1,-1)");
  return o;
}

Outcome identityFamily() {
  Outcome o;
  for (long t = 1; t <= 5; ++t)
    for (unsigned n = 0; n <= 12; ++n)
      for (unsigned k = 0; k <= n; ++k)
        o.require(binomialFamilyCheck(n, k, t), "n=" + std::to_string(n) + " k=" + std::to_string(k));
  for (unsigned s = 0; s <= 12; ++s)
    for (unsigned n = 0; n <= s; ++n) {
      const auto u = unusualIdentity(s, n);
      const auto f = binomialFamily(s, n, 2);
      o.require(u.holds() && u.rhs == f.rhs, "unusual s=" + std::to_string(s));
    }
  for (long t : {1L, 100L}) {
    const auto e = binomialFamily(4, 2, t);
    o.require(e.lhs == 6 && e.rhs == 6, "(4,2," + std::to_string(t) + ")");
  }
  return o;
}

Outcome catalanConvolution() {
  Outcome o;
  o.require(catalanConvolutionCheck(15), "M=15");
  return o;
}

Outcome numericRoot() {
  Outcome o;
  const std::vector<double> c{0.2};
  const auto e = evaluateTruncatedS(c, 30);
  const double root = (1 - std::sqrt(1 - 4 * 0.2)) / (2 * 0.2);
  const double err = std::abs(e.value - root);
  const double res = residualNorm(c, e.value);
  std::ostringstream s;
  s << "value " << e.value << " error " << err << " residual " << res;
  o.require(err < 1e-6 && res < 1e-8, s.str());
  if (o.ok) o.detail = s.str();
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"closed-form spot values", closedFormSpots},
      {"recurrence equals closed form, faces <= 6, gons <= 5", recurrenceMatches},
      {"subdigon enumeration matches closed form, faces <= 5, gons <= 5", enumerationMatches},
      {"powers of S match Raney coefficients, r <= 4", powersOfS},
      {"geometric residual vanishes, D <= 7, K <= 6", residualVanishes},
      {"Geode routes agree, faces <= 5, gons <= 5", geodeRoutes},
      {"geode expand 1,1,1 golden output for k = 2, 3, 4", expansionGoldens},
      {"Geode slices and projections", sequenceTables},
      {"U, H naturality, factorizations and evaluations", gesselSuite},
      {"binomial identity family", identityFamily},
      {"Catalan convolution, m <= 15", catalanConvolution},
      {"numeric root for t2 = 0.2 at 30 levels", numericRoot},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << i + 1 << " " << criteria[i].first;
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << " (" << std::fixed << std::setprecision(2) << secs << "s)\n" << std::defaultfloat;
    if (!o.ok) ++failed;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
