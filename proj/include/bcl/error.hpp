#ifndef GUARD_BCL_ERROR_H
#define GUARD_BCL_ERROR_H

#include <stdexcept>
#include <string>

namespace bcl
{

enum class ErrorCode
{
  // arithmetic
  NonDivisible,
  FactorBoundExceeded,
  BoundExceeded,
  NoDominant,
  NIsOne,
  NotCoprime,
  KExceedsN,
  InvalidArgument,
  // permutations and groups
  MalformedCycle,
  PointOutOfRange,
  RepeatedPoint,
  DegreeMismatch,
  DegenerateSubset,
  NonUniformPartition,
  MalformedPartition,
  UnsupportedDescriptor,
  OrderExceedsBound,
  // double cosets
  BlockCountMismatch,
  BlockSizesMismatch,
  OddInput,
  UnsupportedStabilizer,
  NormalizerEqualsH,
  TooLarge,
  // bi-coset graphs and graphs
  IndexBoundExceeded,
  NotSubgroup,
  SearchBudgetExceeded,
  MalformedGraph,
  // catalog
  InvalidParameters,
  OmegaEqualsPsi,
  NoCofactorPrimes,
  NOutOfRange,
  UnknownGroup,
  // input files
  MalformedInput
};

char const *errorCodeName(ErrorCode code);

// True for errors caused by a configured resource limit rather than by bad
// input or a failed check.
bool isResourceError(ErrorCode code);

class Error : public std::runtime_error
{
public:
  Error(ErrorCode code, std::string const &message)
  : std::runtime_error(std::string(errorCodeName(code)) + ": " + message),
    _code(code)
  {}

  ErrorCode code() const { return _code; }

private:
  ErrorCode _code;
};

} // namespace bcl

#endif // GUARD_BCL_ERROR_H
