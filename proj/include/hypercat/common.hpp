#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hypercat {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Text or JSON input could not be read as the requested value.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Binary series operations require both operands to share one truncation.
class TruncationMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Division by t2 + t3 + ... + tK left a nonzero remainder.
class NotDivisible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A recurrence exceeded its expansion budget.
class NonTermination : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A summand of a binomial identity has a zero binomial in its denominator.
class DegenerateTerm : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical invariant that must hold failed; this is a bug, not bad input.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hypercat
