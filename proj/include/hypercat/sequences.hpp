#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypercat/common.hpp"
#include "hypercat/series.hpp"
#include "hypercat/typevec.hpp"

namespace hypercat {

/// A type vector with one free component, written like "n,0,1".
class SliceTemplate {
 public:
  /// Exactly one slot must be the letter n; brackets are optional.
  static SliceTemplate parse(std::string_view text);

  TypeVec instantiate(unsigned n) const;
  /// Largest gon index the template can touch.
  unsigned maxGon() const { return static_cast<unsigned>(slots_.size()) + 1; }
  std::string str() const;

 private:
  std::vector<std::optional<unsigned>> slots_;  // nullopt marks the free slot
};

/// The seven two-shape Geode slices tabulated for the encyclopedia, in order.
const std::vector<std::string>& standardSlices();

/// G at instantiate(0..count-1), from series division with a truncation
/// sized to fit.
std::vector<BigInt> geodeSlice(const SliceTemplate& pattern, unsigned count);
/// Same, read from a precomputed G. Throws DomainError when a requested type
/// lies outside g's truncation.
std::vector<BigInt> geodeSlice(const SliceTemplate& pattern, unsigned count, const PolySeries& g);

enum class ProjectionFamily { LittleSchroeder, Riordan, Cayley };
enum class ProjectionTarget { S, G };

/// Row w holds the coefficient(s) of the w-th power of the outer variable.
/// LittleSchroeder (t_k -> v^(k-1)) and Riordan (t_k -> e^k) give one value
/// per row. Cayley (t_k -> v^(k-1) f) gives row 0 as {1 or 0} and row w >= 1
/// as the f^w, f^(w-1), ..., f^1 coefficients, highest power first.
using CoefficientTable = std::vector<std::vector<BigInt>>;

CoefficientTable projectedSequence(ProjectionFamily family, ProjectionTarget target, unsigned count);

/// Resolves a slice template ("n,1") or a projection name such as
/// "little-schroeder-geode", "riordan", "cayley-geode", "catalan".
/// Throws ParseError for unknown names.
CoefficientTable namedSequence(const std::string& name, unsigned count);

/// Flattens a table row by row; for Cayley this is the dovetailed order.
std::vector<BigInt> flatten(const CoefficientTable& table);

/// "index value" per line, starting at index 0.
std::string formatBFile(const std::vector<BigInt>& values);

}  // namespace hypercat
