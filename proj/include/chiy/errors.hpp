#pragma once

#include <stdexcept>
#include <string>

namespace chiy {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Interpolation / sampling was given a repeated node.
class DistinctNodesError : public Error {
public:
  using Error::Error;
};

// A count did not match what an operation requires (nodes vs values, ...).
class ArityError : public Error {
public:
  using Error::Error;
};

class SingularMatrixError : public Error {
public:
  using Error::Error;
};

// Mismatched truncation weights, graded dimensions, or out-of-range degrees.
class DimensionError : public Error {
public:
  using Error::Error;
};

// A series operation was applied outside its domain (e.g. log of a series
// whose constant term is not 1).
class SeriesDomainError : public Error {
public:
  using Error::Error;
};

// The requested computation is not defined for this variety model.
class UnsupportedModelError : public Error {
public:
  using Error::Error;
};

// A descriptor violates one of its model invariants.
class ModelConstraintError : public Error {
public:
  using Error::Error;
};

// Malformed input text (JSON or rational literals).
class ParseError : public Error {
public:
  using Error::Error;
};

// Structurally valid JSON that does not match the descriptor schema.
class SchemaError : public Error {
public:
  using Error::Error;
};

class MissingDataError : public Error {
public:
  using Error::Error;
};

class ParityError : public Error {
public:
  using Error::Error;
};

}  // namespace chiy
