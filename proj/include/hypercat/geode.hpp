#pragma once

#include <optional>
#include <vector>

#include "hypercat/common.hpp"
#include "hypercat/series.hpp"

namespace hypercat {

/// G with S - 1 = S1 G, from S built at trunc. The result carries truncation
/// (maxFaces - 1, maxGon) because dividing by S1 loses one face level.
PolySeries buildG(Truncation trunc);

/// U = 1 - 1/S at trunc. Throws IntegrityError on a negative coefficient.
PolySeries buildU(Truncation trunc);

/// H = U / S1, equivalently G / S, at (maxFaces - 1, maxGon).
/// Throws IntegrityError on a negative coefficient.
PolySeries buildH(Truncation trunc);

/// H^-1 computed directly: 1 - sum_{n=2..K} t_n (S + S^2 + ... + S^(n-1)).
PolySeries geodeHInverseDirect(const PolySeries& s);

/// f-coefficients c_0..c_maxDegree of G with t2 = -f, t3 = f, ..., t_{2k+1} = f.
std::vector<BigInt> alternatingGeodeEval(unsigned kPairs, unsigned maxDegree);

/// f-coefficients of G with t_k = c_k f, where weights[0] is c_2. The weights
/// must sum to zero; throws DomainError otherwise.
std::vector<BigInt> zeroSumGeodeEval(const std::vector<BigInt>& weights, unsigned maxDegree);

/// Coefficients of (1 - a f)^-1 up to f^maxDegree.
std::vector<BigInt> geometricSeries(const BigInt& a, unsigned maxDegree);

/// Geode coefficient from a proven closed form when one applies: a single
/// shape, two consecutive shapes, or two arbitrary distinct shapes via the
/// alternating hyper-Catalan sum. Empty for three or more shapes.
std::optional<BigInt> geodeClosedFormValue(const TypeVec& m);

}  // namespace hypercat
