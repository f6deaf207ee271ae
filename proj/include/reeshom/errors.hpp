#pragma once

#include <stdexcept>
#include <string>

namespace reeshom {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Group / algebra construction.
struct NotAssociativeError : Error {
  using Error::Error;
};
struct NoIdentityError : Error {
  using Error::Error;
};
struct NoInverseError : Error {
  using Error::Error;
};
struct AlgebraMismatchError : Error {
  using Error::Error;
};

// Rees semigroup construction.
struct BadShapeError : Error {
  using Error::Error;
};
struct EmptyRowError : Error {
  std::size_t row;
  EmptyRowError(const std::string& what, std::size_t r) : Error(what), row(r) {}
};
struct EmptyColumnError : Error {
  std::size_t col;
  EmptyColumnError(const std::string& what, std::size_t c) : Error(what), col(c) {}
};
struct RangeMismatchError : Error {
  using Error::Error;
};
struct ZeroSandwichEntryError : Error {
  using Error::Error;
};

// Modules and homology.
struct NotIdempotentError : Error {
  using Error::Error;
};
struct IllDefinedActionError : Error {
  using Error::Error;
};
struct NotInducedError : Error {
  using Error::Error;
};
struct BadSplittingError : Error {
  using Error::Error;
};
struct SizeGuardError : Error {
  std::size_t size;
  SizeGuardError(const std::string& what, std::size_t s) : Error(what), size(s) {}
};

// Configuration / CLI input.
struct ConfigError : Error {
  std::size_t line;  // 1-based, 0 when not positional
  explicit ConfigError(const std::string& what, std::size_t l = 0) : Error(what), line(l) {}
};
struct UnknownGroupElementError : ConfigError {
  using ConfigError::ConfigError;
};

}  // namespace reeshom
