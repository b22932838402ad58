#pragma once

#include <span>
#include <vector>

namespace hypercat {

/// Partial sum of S evaluated at numeric t's, with per-level diagnostics.
struct SeriesEvaluation {
  double value = 0.0;
  /// increments[d] is the contribution of the d-face level.
  std::vector<double> increments;
  /// Set when the last five increment magnitudes never decrease.
  bool divergenceSuspected = false;
};

/// coeffs[0] is t2, coeffs[1] is t3, and so on; levels is the face bound D.
/// Sums C_m t^m over all m with at most D faces, one face level at a time.
SeriesEvaluation evaluateTruncatedS(std::span<const double> coeffs, unsigned levels);

/// |1 - alpha + t2 alpha^2 + t3 alpha^3 + ...|
double residualNorm(std::span<const double> coeffs, double alpha);

}  // namespace hypercat
