#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hypercat {

struct VerifyBounds {
  unsigned faces = 5;
  unsigned gons = 5;
  unsigned rMax = 4;           // raney: largest power of S
  unsigned convolutionMax = 15;
  unsigned nMax = 12;          // identities
  unsigned tMax = 5;           // identities
  unsigned fDegree = 8;        // gessel: f-series length
};

struct CaseFailure {
  std::string item;
  std::string expected;
  std::string actual;
};

struct SuiteReport {
  std::string name;
  std::size_t cases = 0;
  std::vector<CaseFailure> failures;
  /// Extra lines a suite wants shown, e.g. the identities pass/fail matrix.
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }
};

/// recurrence, enumeration, lesser-sum, division-vs-recurrence, raney,
/// convolution, closed-forms, identities, gessel
const std::vector<std::string>& suiteNames();

/// Throws std::invalid_argument for an unknown suite name.
SuiteReport runSuite(std::string_view name, const VerifyBounds& bounds = {});

}  // namespace hypercat
