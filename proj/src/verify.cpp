#include "hypercat/verify.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "hypercat/closed_form.hpp"
#include "hypercat/geode.hpp"
#include "hypercat/identities.hpp"
#include "hypercat/oracle.hpp"
#include "hypercat/recurrence.hpp"
#include "hypercat/series.hpp"

namespace hypercat {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) { report_.name = std::move(name); }

  void check(bool ok, std::string item, std::string expected, std::string actual) {
    ++report_.cases;
    if (!ok) report_.failures.push_back({std::move(item), std::move(expected), std::move(actual)});
  }
  void equal(const BigInt& expected, const BigInt& actual, std::string item) {
    check(expected == actual, std::move(item), expected.str(), actual.str());
  }
  void note(std::string line) { report_.notes.push_back(std::move(line)); }
  SuiteReport take() { return std::move(report_); }

 private:
  SuiteReport report_;
};

std::string seriesList(const std::vector<BigInt>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s;
}

SuiteReport recurrenceSuite(const VerifyBounds& b) {
  Recorder r("recurrence");
  HyperCatalanRecurrence session;
  for (const auto& m : insideTypes({b.faces, b.gons})) r.equal(hyperCatalan(m), session(m), "C" + m.str());
  return r.take();
}

SuiteReport enumerationSuite(const VerifyBounds& b) {
  Recorder r("enumeration");
  const Truncation trunc{b.faces, b.gons};
  const auto counts = enumerateSubdigons(b.faces, b.gons);
  for (const auto& m : insideTypes(trunc)) {
    auto it = counts.find(m);
    r.equal(hyperCatalan(m), it == counts.end() ? BigInt(0) : it->second, "C" + m.str());
  }
  for (const auto& [m, c] : counts) r.check(trunc.inside(m), "enumerated type " + m.str(), "inside", "outside");
  return r.take();
}

SuiteReport lesserSumSuite(const VerifyBounds& b) {
  Recorder r("lesser-sum");
  const PolySeries g = buildG({b.faces, b.gons});
  for (const auto& m : insideTypes({b.faces, b.gons})) {
    if (m.empty()) continue;
    BigInt sum = 0;
    for (const auto& [j, l] : lessers(m)) sum += g.coeff(l);
    r.equal(hyperCatalan(m), sum, "C" + m.str() + " vs sum of G over lessers");
  }
  return r.take();
}

SuiteReport divisionVsRecurrenceSuite(const VerifyBounds& b) {
  Recorder r("division-vs-recurrence");
  const PolySeries g = buildG({b.faces + 1, b.gons});
  GeodeRecurrence session(XStrategy::largestComponent());
  for (const auto& m : insideTypes({b.faces, b.gons})) {
    const BigInt viaDivision = g.coeff(m);
    r.equal(viaDivision, session.value(m), "G" + m.str());
    r.check(viaDivision >= 0, "G" + m.str() + " natural", ">= 0", viaDivision.str());
  }
  return r.take();
}

SuiteReport raneySuite(const VerifyBounds& b) {
  Recorder r("raney");
  const Truncation trunc{b.faces, b.gons};
  const PolySeries s = buildS(trunc);
  PolySeries power = PolySeries::constant(trunc, 1);
  const auto types = insideTypes(trunc);
  for (unsigned rr = 1; rr <= b.rMax; ++rr) {
    power = mul(power, s);
    for (const auto& m : types) {
      const BigInt closed = fussCatalanPower(m, rr);
      const std::string tag = "C^(" + std::to_string(rr) + ")" + m.str();
      r.equal(closed, power.coeff(m), tag + " series power");
      r.equal(closed, powerCoefficient(m, rr, hyperCatalan), tag + " vector partitions");
    }
  }
  return r.take();
}

SuiteReport convolutionSuite(const VerifyBounds& b) {
  Recorder r("convolution");
  for (unsigned m = 0; m <= b.convolutionMax; ++m) {
    BigInt sum = 0;
    for (unsigned n = 0; n <= m; ++n) sum += fussNumber(2, n) * fussNumber(2, m - n);
    r.equal(fussNumber(2, m + 1), sum, "Catalan_" + std::to_string(m + 1));
  }
  r.check(catalanConvolutionCheck(b.convolutionMax), "catalanConvolutionCheck", "true", "false");
  return r.take();
}

SuiteReport closedFormsSuite(const VerifyBounds& b) {
  Recorder r("closed-forms");
  const PolySeries g = buildG({b.faces + 1, b.gons});
  for (const auto& m : insideTypes({b.faces, b.gons})) {
    if (auto closed = geodeClosedFormValue(m)) r.equal(g.coeff(m), *closed, "G" + m.str());
  }
  for (unsigned m = 0; m <= 8; ++m) {
    for (unsigned n = 0; n <= 8; ++n) {
      const std::string tag = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
      r.equal(hyperCatalan(TypeVec::fromDense({m + 1, n + 1})) - geodeBiTriClosed(m + 1, n),
              geodeBiTriClosed(m, n + 1), "bi-tri step H" + tag);
    }
  }
  for (unsigned k = 2; k <= 5; ++k) {
    for (unsigned m = 0; m <= 6; ++m) {
      for (unsigned n = 0; n <= 6; ++n) {
        const std::string tag = "(" + std::to_string(k) + "," + std::to_string(m) + "," + std::to_string(n) + ")";
        const TypeVec top = TypeVec::basis(k, m + 1) + TypeVec::basis(k + 1, n + 1);
        r.equal(hyperCatalan(top), geodeConsecutiveClosed(k, m + 1, n) + geodeConsecutiveClosed(k, m, n + 1),
                "consecutive step H" + tag);
        if (k == 2) r.equal(geodeBiTriClosed(m, n), geodeConsecutiveClosed(2, m, n), "H" + tag + " vs bi-tri");
      }
    }
  }
  return r.take();
}

SuiteReport identitiesSuite(const VerifyBounds& b) {
  Recorder r("identities");
  for (unsigned n = 0; n <= b.nMax; ++n) {
    std::string row = "n=" + std::to_string(n) + (n < 10 ? " " : "");
    for (unsigned t = 1; t <= b.tMax; ++t) {
      bool all = true;
      for (unsigned k = 0; k <= n; ++k) {
        bool ok = false;
        std::string actual;
        try {
          const auto sides = binomialFamily(n, k, t);
          ok = sides.holds();
          actual = sides.rhs.str();
        } catch (const DegenerateTerm& e) {
          actual = e.what();
        }
        all = all && ok;
        r.check(ok, "family n=" + std::to_string(n) + " k=" + std::to_string(k) + " t=" + std::to_string(t),
                binomial(n, k).str(), actual);
      }
      row += " t=" + std::to_string(t) + (all ? ":ok  " : ":FAIL");
    }
    r.note(row);
  }
  for (unsigned s = 0; s <= b.nMax; ++s) {
    for (unsigned n = 0; n <= s; ++n) {
      const auto unusual = unusualIdentity(s, n);
      const auto family = binomialFamily(s, n, 2);
      const std::string tag = "s=" + std::to_string(s) + " n=" + std::to_string(n);
      r.check(unusual.holds(), "unusual " + tag, unusual.lhs.str(), unusual.rhs.str());
      r.check(unusual.rhs == family.rhs, "unusual vs family t=2 " + tag, family.rhs.str(), unusual.rhs.str());
    }
  }
  return r.take();
}

SuiteReport gesselSuite(const VerifyBounds& b) {
  Recorder r("gessel");
  const Truncation top{b.faces + 1, b.gons};
  const Truncation trunc{b.faces, b.gons};
  const PolySeries u = buildU(top);  // also checks naturality
  const PolySeries h = buildH(top);
  const PolySeries g = buildG(top);
  const PolySeries s = buildS(trunc);
  for (const auto& [m, c] : u.terms()) r.check(c >= 0, "U" + m.str() + " natural", ">= 0", c.str());
  for (const auto& [m, c] : h.terms()) r.check(c >= 0, "H" + m.str() + " natural", ">= 0", c.str());
  r.check(mul(h, s) == g, "H*S == G", "equal", "differ");
  const PolySeries hWide = h.retruncated(top);
  r.check(mul(hWide, PolySeries::faceOne(top)) == u, "H*S1 == U", "equal", "differ");
  r.check(mul(h, geodeHInverseDirect(s)) == PolySeries::constant(trunc, 1), "H * H^-1 == 1", "equal", "differ");
  for (unsigned k = 1; k <= 3; ++k) {
    const auto got = alternatingGeodeEval(k, b.fDegree);
    const auto want = geometricSeries(k, b.fDegree);
    r.check(got == want, "G[-f,f,...] with " + std::to_string(k) + " pairs", seriesList(want), seriesList(got));
  }
  const auto zs = zeroSumGeodeEval({1, -1}, b.fDegree);
  const auto zsWant = geometricSeries(-1, b.fDegree);
  r.check(zs == zsWant, "G[f,-f]", seriesList(zsWant), seriesList(zs));
  return r.take();
}

using SuiteFn = SuiteReport (*)(const VerifyBounds&);

const std::map<std::string, SuiteFn, std::less<>>& registry() {
  static const std::map<std::string, SuiteFn, std::less<>> suites{
      {"recurrence", recurrenceSuite},
      {"enumeration", enumerationSuite},
      {"lesser-sum", lesserSumSuite},
      {"division-vs-recurrence", divisionVsRecurrenceSuite},
      {"raney", raneySuite},
      {"convolution", convolutionSuite},
      {"closed-forms", closedFormsSuite},
      {"identities", identitiesSuite},
      {"gessel", gesselSuite},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suiteNames() {
  static const std::vector<std::string> names{"recurrence", "enumeration",  "lesser-sum",
                                              "division-vs-recurrence", "raney", "convolution",
                                              "closed-forms", "identities",   "gessel"};
  return names;
}

SuiteReport runSuite(std::string_view name, const VerifyBounds& bounds) {
  const auto& suites = registry();
  auto it = suites.find(name);
  if (it == suites.end()) throw std::invalid_argument("unknown verification suite '" + std::string(name) + "'");
  return it->second(bounds);
}

}  // namespace hypercat
