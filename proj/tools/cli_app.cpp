#include "cli_app.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "hypercat/closed_form.hpp"
#include "hypercat/geode.hpp"
#include "hypercat/json_io.hpp"
#include "hypercat/numroot.hpp"
#include "hypercat/oracle.hpp"
#include "hypercat/sequences.hpp"
#include "hypercat/series.hpp"
#include "hypercat/verify.hpp"

namespace hypercat::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::string formatDouble(double x) {
  std::ostringstream s;
  s << std::setprecision(15) << x;
  return s.str();
}

void printValue(std::ostream& out, const std::string& format, const TypeVec& m, const BigInt& v) {
  if (format == "json") out << nlohmann::json{{"type", toJson(m)}, {"value", v.str()}}.dump() << "\n";
  else out << v << "\n";
}

BigInt hyperCatalanVia(const TypeVec& m, const std::string& via) {
  if (via == "recurrence") return hyperCatalanRecurrence(m);
  if (via == "enumeration") {
    const auto counts = enumerateSubdigons(faces(m), std::max(2u, m.maxGon()));
    auto it = counts.find(m);
    return it == counts.end() ? BigInt(0) : it->second;
  }
  return hyperCatalan(m);
}

BigInt geodeVia(const TypeVec& m, const std::string& via) {
  if (via == "recurrence") return geodeRecurrenceValue(m, XStrategy::largestComponent());
  if (via == "closed") {
    auto v = geodeClosedFormValue(m);
    if (!v) throw DomainError("no closed form applies to " + m.str() + " (three or more shapes)");
    return *v;
  }
  return buildG({faces(m) + 1, std::max(2u, m.maxGon())}).coeff(m);
}

PolySeries buildWhich(const std::string& which, unsigned faces, unsigned gons) {
  const Truncation trunc{faces, gons};
  if (which == "S") return buildS(trunc);
  if (which == "U") return buildU(trunc);
  if (which == "G") return buildG({faces + 1, gons});
  return buildH({faces + 1, gons});
}

void printSeries(std::ostream& out, const std::string& format, const PolySeries& p) {
  if (format == "json") {
    out << toJson(p).dump(1) << "\n";
    return;
  }
  for (const auto& [m, c] : p.terms()) out << m.str() << " " << c << "\n";
}

std::vector<double> parseCoeffs(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string field;
  while (std::getline(in, field, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(field, &used));
      if (used != field.size()) throw std::invalid_argument(field);
    } catch (const std::exception&) {
      throw ParseError("bad coefficient '" + field + "'");
    }
  }
  return out;
}

int printReport(std::ostream& out, const SuiteReport& report) {
  for (const auto& line : report.notes) out << line << "\n";
  out << report.name << ": " << report.cases << " cases, " << report.failures.size() << " failures\n";
  if (!report.failures.empty()) {
    out << "item | expected | actual\n";
    for (const auto& f : report.failures) out << f.item << " | " << f.expected << " | " << f.actual << "\n";
  }
  return report.passed() ? kOk : kFailed;
}

}  // namespace

std::string formatCombination(const SignedCombination& combo) {
  std::vector<std::pair<TypeVec, BigInt>> terms(combo.begin(), combo.end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (distinctShapes(a.first) != distinctShapes(b.first)) return distinctShapes(a.first) > distinctShapes(b.first);
    if (a.first.maxGon() != b.first.maxGon()) return a.first.maxGon() > b.first.maxGon();
    return lexCompare(a.first, b.first) < 0;
  });
  std::string s;
  for (const auto& [m, c] : terms) {
    if (!s.empty()) s += ' ';
    s += c < 0 ? '-' : '+';
    BigInt mag = abs(c);
    if (mag != 1) s += mag.str();
    s += m.str();
  }
  return s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hyper-Catalan and Geode numbers: exact computation and verification"};
  app.require_subcommand(1);
  std::string format = "text";

  // hc
  auto* hc = app.add_subcommand("hc", "hyper-Catalan number C_m");
  std::string hcType, hcVia = "closed";
  hc->add_option("type", hcType, "type vector m2,m3,...")->required();
  hc->add_option("--via", hcVia, "route")->check(CLI::IsMember({"closed", "recurrence", "enumeration"}));
  hc->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // fuss
  auto* fuss = app.add_subcommand("fuss", "coefficient of t^m in S^r");
  std::string fussType;
  unsigned fussR = 1;
  fuss->add_option("type", fussType)->required();
  fuss->add_option("-r", fussR, "power of S")->check(CLI::PositiveNumber);
  fuss->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // geode
  auto* geode = app.add_subcommand("geode", "Geode coefficients");
  geode->require_subcommand(1);
  auto* geodeValue = geode->add_subcommand("value", "Geode coefficient G_m");
  std::string gvType, gvVia = "division";
  geodeValue->add_option("type", gvType)->required();
  geodeValue->add_option("--via", gvVia)->check(CLI::IsMember({"division", "recurrence", "closed"}));
  geodeValue->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  auto* geodeExpand = geode->add_subcommand("expand", "G_m as a signed sum of hyper-Catalans");
  std::string geType, geX = "max";
  geodeExpand->add_option("type", geType)->required();
  geodeExpand->add_option("--x", geX, "strategy: a gon index or 'max'");
  bool geLead = false;
  geodeExpand->add_flag("--lead-only", geLead, "use the --x index for the first step only, then 'max'");
  geodeExpand->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // series
  auto* series = app.add_subcommand("series", "truncated series");
  series->require_subcommand(1);
  auto* seriesBuild = series->add_subcommand("build", "build S, G, U or H");
  unsigned sbFaces = 3, sbGons = 4;
  std::string sbWhich = "S", sbLayer;
  std::string seriesFormat = "json";
  seriesBuild->add_option("--faces", sbFaces, "face bound D of the output");
  seriesBuild->add_option("--gons", sbGons, "largest gon index K")->check(CLI::Range(2u, 64u));
  seriesBuild->add_option("--which", sbWhich)->check(CLI::IsMember({"S", "G", "U", "H"}));
  seriesBuild->add_option("--layer", sbLayer)->check(CLI::IsMember({"face", "vertex"}));
  seriesBuild->add_option("--format", seriesFormat)->check(CLI::IsMember({"text", "json"}));

  // seq
  auto* seq = app.add_subcommand("seq", "sequence tables");
  std::string seqName, seqFormat = "bfile";
  unsigned seqCount = 10;
  seq->add_option("name", seqName, "slice template like n,0,1 or a projection name")->required();
  seq->add_option("--count", seqCount)->check(CLI::PositiveNumber);
  seq->add_option("--format", seqFormat)->check(CLI::IsMember({"bfile", "json"}));

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  VerifyBounds bounds;
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suiteNames()));
  verify->add_option("--faces", bounds.faces, "face bound of type sweeps");
  verify->add_option("--gons", bounds.gons, "largest gon index of type sweeps")->check(CLI::Range(2u, 64u));
  verify->add_option("--n-max", bounds.nMax, "identities: largest n");
  verify->add_option("--t-max", bounds.tMax, "identities: largest t");
  verify->add_option("--r-max", bounds.rMax, "raney: largest power of S");
  verify->add_option("--m-max", bounds.convolutionMax, "convolution: largest m");
  verify->add_option("--degree", bounds.fDegree, "gessel: f-series degree");

  // solve
  auto* solve = app.add_subcommand("solve", "root of 1 - a + c2 a^2 + c3 a^3 + ... from the truncated series");
  std::string solveCoeffs;
  unsigned solveLevels = 30;
  solve->add_option("--coeffs", solveCoeffs, "c2,c3,...")->required();
  solve->add_option("--levels", solveLevels, "face bound D");
  solve->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> argvStore{"hypercat"};
  argvStore.insert(argvStore.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argvStore) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*hc) {
      const TypeVec m = TypeVec::parse(hcType);
      printValue(out, format, m, hyperCatalanVia(m, hcVia));
    } else if (*fuss) {
      const TypeVec m = TypeVec::parse(fussType);
      printValue(out, format, m, fussCatalanPower(m, fussR));
    } else if (*geodeValue) {
      const TypeVec m = TypeVec::parse(gvType);
      printValue(out, format, m, geodeVia(m, gvVia));
    } else if (*geodeExpand) {
      const TypeVec m = TypeVec::parse(geType);
      const XStrategy x = XStrategy::parse(geX);
      if (geLead && x.kind() != XStrategy::Kind::ConstantIndex) throw DomainError("--lead-only needs a gon index for --x");
      const SignedCombination combo =
          geLead ? geodeExpandLeading(m, x.index()) : geodeExpandToHyperCatalans(m, x);
      const BigInt total = evaluate(combo);
      if (format == "json") {
        out << nlohmann::json{{"type", toJson(m)}, {"terms", toJson(combo)}, {"value", total.str()}}.dump(1) << "\n";
      } else {
        out << formatCombination(combo) << " = " << total << "\n";
      }
    } else if (*seriesBuild) {
      const PolySeries p = buildWhich(sbWhich, sbFaces, sbGons);
      if (sbLayer.empty()) {
        printSeries(out, seriesFormat, p);
      } else {
        const bool vertex = sbLayer == "vertex";
        // A vertex layer w is complete only while w <= D and w + 1 <= K.
        const unsigned complete = vertex ? std::min(sbFaces, sbGons - 1) : sbFaces;
        nlohmann::json layers = nlohmann::json::array();
        for (const auto& [w, part] : layer(p, vertex ? Layering::Vertex : Layering::Face)) {
          if (w > complete) continue;
          if (seriesFormat == "json") {
            layers.push_back({{"degree", w}, {"terms", toJson(part)}});
          } else {
            out << (vertex ? "v^" : "f^") << w << ":\n";
            printSeries(out, seriesFormat, part);
          }
        }
        if (seriesFormat == "json") out << nlohmann::json{{"layering", sbLayer}, {"layers", layers}}.dump(1) << "\n";
      }
    } else if (*seq) {
      const CoefficientTable table = namedSequence(seqName, seqCount);
      if (seqFormat == "bfile") {
        out << formatBFile(flatten(table));
      } else {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : table) {
          if (row.size() == 1 && seqName.find("cayley") == std::string::npos) {
            rows.push_back(row[0].str());
          } else {
            nlohmann::json r = nlohmann::json::array();
            for (const auto& v : row) r.push_back(v.str());
            rows.push_back(r);
          }
        }
        out << rows.dump() << "\n";
      }
    } else if (*verify) {
      return printReport(out, runSuite(suite, bounds));
    } else if (*solve) {
      const auto coeffs = parseCoeffs(solveCoeffs);
      const auto eval = evaluateTruncatedS(coeffs, solveLevels);
      const double residual = residualNorm(coeffs, eval.value);
      if (format == "json") {
        nlohmann::json incs = nlohmann::json::array();
        for (double d : eval.increments) incs.push_back(d);
        out << nlohmann::json{{"value", eval.value},
                              {"residual", residual},
                              {"divergence_suspected", eval.divergenceSuspected},
                              {"increments", incs}}
                   .dump(1)
            << "\n";
      } else {
        out << "value " << formatDouble(eval.value) << "\n";
        out << "residual " << formatDouble(residual) << "\n";
        out << "divergence-suspected " << (eval.divergenceSuspected ? "yes" : "no") << "\n";
        for (std::size_t d = 0; d < eval.increments.size(); ++d) {
          out << "level " << d << " " << formatDouble(eval.increments[d]) << "\n";
        }
      }
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kOk;
}

}  // namespace hypercat::cli
