#pragma once

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "hypercat/common.hpp"
#include "hypercat/typevec.hpp"

namespace hypercat {

/// Grading bound for series work: a type m is inside when faces(m) <= maxFaces
/// and no nonzero component has gon index above maxGon.
struct Truncation {
  unsigned maxFaces = 0;
  unsigned maxGon = 2;

  bool inside(const TypeVec& m) const { return faces(m) <= maxFaces && m.maxGon() <= maxGon; }
  auto operator<=>(const Truncation&) const = default;
};

/// Every type inside the truncation, in TypeVec order (faces, then lex).
std::vector<TypeVec> insideTypes(const Truncation& trunc);

/// Truncated multivariate power series in t2..tK with integer coefficients.
/// Terms outside the truncation are dropped on insertion; zero coefficients
/// are never stored.
class PolySeries {
 public:
  using Terms = std::map<TypeVec, BigInt>;

  explicit PolySeries(Truncation trunc) : trunc_(trunc) {}

  static PolySeries constant(Truncation trunc, const BigInt& c);
  static PolySeries monomial(Truncation trunc, const TypeVec& m, const BigInt& c = 1);
  /// S1 = t2 + t3 + ... + tK (empty when maxFaces == 0).
  static PolySeries faceOne(Truncation trunc);

  const Truncation& truncation() const { return trunc_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool isZero() const { return terms_.empty(); }
  BigInt coeff(const TypeVec& m) const;

  /// Adds c to the coefficient of t^m; silently ignored when m is outside.
  void addTerm(const TypeVec& m, const BigInt& c);

  /// The terms with exactly d faces, under the same truncation.
  PolySeries level(unsigned d) const;
  /// Same terms under another truncation; anything outside it is dropped.
  PolySeries retruncated(Truncation trunc) const;

  PolySeries& operator+=(const PolySeries& other);
  PolySeries& operator-=(const PolySeries& other);
  PolySeries operator-() const;

  friend bool operator==(const PolySeries&, const PolySeries&) = default;

 private:
  Truncation trunc_;
  Terms terms_;
};

PolySeries add(const PolySeries& a, const PolySeries& b);
PolySeries sub(const PolySeries& a, const PolySeries& b);
PolySeries scale(const PolySeries& a, const BigInt& c);
PolySeries mul(const PolySeries& a, const PolySeries& b);
PolySeries pow(const PolySeries& a, unsigned r);
/// Multiplies by the monomial t^m (a shift of every exponent).
PolySeries shift(const PolySeries& a, const TypeVec& m);

/// Multiplicative inverse; the constant term of a must be 1.
PolySeries inverse(const PolySeries& a);

/// Exact quotient q with (t2 + ... + tK) q = p, computed level by level by
/// reducing the leading monomial (lex order, t2 heaviest) against t2.
/// p must have zero constant term and maxFaces >= 1; the quotient is
/// truncated to maxFaces - 1. Throws NotDivisible on a nonzero remainder.
PolySeries divideByS1(const PolySeries& p);

enum class BuildMethod { ClosedForm, FixedPoint };

/// The hyper-Catalan generating series S = sum C_m t^m.
PolySeries buildS(Truncation trunc, BuildMethod method = BuildMethod::ClosedForm);

/// 1 - S + t2 S^2 + ... + tK S^K; the zero series when S is the true zero.
PolySeries residualGeometric(const PolySeries& s);

/// Image of t_k under a monomial substitution: coeff * v^vExp * f^fExp.
struct MonomialImage {
  BigInt coeff = 1;
  unsigned vExp = 0;
  unsigned fExp = 0;
};
using SubstitutionRule = std::map<unsigned, MonomialImage>;
/// Coefficients keyed by (v exponent, f exponent).
using BivariatePoly = std::map<std::pair<unsigned, unsigned>, BigInt>;

/// Replaces each t_k by its image and collects terms. The rule must cover
/// every gon index 2..maxGon; throws DomainError otherwise.
BivariatePoly substituteMonomial(const PolySeries& p, const SubstitutionRule& rule);

enum class Layering { Face, Vertex };

/// Regrades p keeping the t's: Face groups by faces(m) (t_k -> f t_k),
/// Vertex by sum (k-1) m_k (t_k -> v^(k-1) t_k). Empty layers are omitted.
std::map<unsigned, PolySeries> layer(const PolySeries& p, Layering kind);

}  // namespace hypercat
