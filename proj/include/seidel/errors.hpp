#pragma once

#include <stdexcept>
#include <string>

namespace seidel {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidVertex : Error {
  using Error::Error;
};

struct SelfLoop : Error {
  using Error::Error;
};

struct NotATree : Error {
  using Error::Error;
};

struct TooSmall : Error {
  using Error::Error;
};

struct InvalidFamilyParams : Error {
  using Error::Error;
};

struct EigenNoConvergence : Error {
  using Error::Error;
};

struct OracleTooLarge : Error {
  using Error::Error;
};

struct NotDisjoint : Error {
  using Error::Error;
};

struct IsLambdaEdge : Error {
  using Error::Error;
};

struct ClassificationFailure : Error {
  using Error::Error;
};

struct InvalidPrufer : Error {
  using Error::Error;
};

struct EnumerationTooLarge : Error {
  using Error::Error;
};

struct OutOfDomain : Error {
  using Error::Error;
};

struct ExcludedTree : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace seidel
