#pragma once

#include <stdexcept>
#include <string>

namespace qgl3 {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroDivisor : Error {
  ZeroDivisor() : Error("division by zero scalar") {}
};

struct DivisibilityError : Error {
  explicit DivisibilityError(const std::string& what) : Error(what) {}
};

struct OverflowError : Error {
  OverflowError() : Error("exponent arithmetic overflow") {}
};

struct DimensionError : Error {
  explicit DimensionError(const std::string& what) : Error(what) {}
};

struct HomogeneityError : Error {
  explicit HomogeneityError(const std::string& what) : Error(what) {}
};

struct BoundExceeded : Error {
  explicit BoundExceeded(const std::string& what) : Error(what) {}
};

struct ShapeError : Error {
  explicit ShapeError(const std::string& what) : Error(what) {}
};

struct NotATorus : Error {
  explicit NotATorus(const std::string& what) : Error(what) {}
};

struct CatalogIntegrityError : Error {
  explicit CatalogIntegrityError(const std::string& what) : Error(what) {}
};

struct ParameterError : Error {
  explicit ParameterError(const std::string& what) : Error(what) {}
};

}  // namespace qgl3
