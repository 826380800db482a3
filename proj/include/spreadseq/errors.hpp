#pragma once

#include <stdexcept>
#include <string>

namespace spreadseq {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Mismatched dimensions, lengths or moduli between operands.
class ShapeError : public Error {
  public:
    explicit ShapeError(const std::string& what) : Error(what) {}
};

/// Argument outside its documented domain (bad range, bad modulus, ...).
class ValueError : public Error {
  public:
    explicit ValueError(const std::string& what) : Error(what) {}
};

/// A construction side condition does not hold. The message names the
/// offending index or coordinate.
class ConditionViolation : public Error {
  public:
    explicit ConditionViolation(const std::string& what) : Error(what) {}
};

/// Family too small for the requested statistic (fewer than two members).
class InsufficientFamilyError : public Error {
  public:
    explicit InsufficientFamilyError(const std::string& what) : Error(what) {}
};

/// Materialization would exceed the configured memory budget.
class CapacityError : public Error {
  public:
    explicit CapacityError(const std::string& what) : Error(what) {}
};

/// Malformed input file.
class ParseError : public Error {
  public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace spreadseq
