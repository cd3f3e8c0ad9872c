#pragma once

#include <stdexcept>
#include <string>

namespace moufang {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Shape mismatch between tensors, matrices or vectors.
class DimensionError : public Error {
public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

/// A constructor precondition failed (missing unit, bad operand count, ...).
class ConstructionError : public Error {
public:
  explicit ConstructionError(const std::string& what) : Error(what) {}
};

/// The imaginary span is not closed under the commutator; carries the
/// offending basis pair and the coefficient that escaped onto the unit.
class ClosureError : public ConstructionError {
public:
  ClosureError(const std::string& what, std::size_t i, std::size_t j,
               std::string unit_coefficient)
      : ConstructionError(what), lhs_index(i), rhs_index(j),
        unit_coeff(std::move(unit_coefficient)) {}

  std::size_t lhs_index;
  std::size_t rhs_index;
  std::string unit_coeff;
};

/// Malformed input file (position-annotated where the parser provides one).
class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

/// Invalid request detected before any computation starts.
class UsageError : public Error {
public:
  explicit UsageError(const std::string& what) : Error(what) {}
};

} // namespace moufang
