#include "bcl/error.hpp"

namespace bcl
{

char const *errorCodeName(ErrorCode code)
{
  switch (code) {
  case ErrorCode::NonDivisible: return "NonDivisible";
  case ErrorCode::FactorBoundExceeded: return "FactorBoundExceeded";
  case ErrorCode::BoundExceeded: return "BoundExceeded";
  case ErrorCode::NoDominant: return "NoDominant";
  case ErrorCode::NIsOne: return "NIsOne";
  case ErrorCode::NotCoprime: return "NotCoprime";
  case ErrorCode::KExceedsN: return "KExceedsN";
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  case ErrorCode::MalformedCycle: return "MalformedCycle";
  case ErrorCode::PointOutOfRange: return "PointOutOfRange";
  case ErrorCode::RepeatedPoint: return "RepeatedPoint";
  case ErrorCode::DegreeMismatch: return "DegreeMismatch";
  case ErrorCode::DegenerateSubset: return "DegenerateSubset";
  case ErrorCode::NonUniformPartition: return "NonUniformPartition";
  case ErrorCode::MalformedPartition: return "MalformedPartition";
  case ErrorCode::UnsupportedDescriptor: return "UnsupportedDescriptor";
  case ErrorCode::OrderExceedsBound: return "OrderExceedsBound";
  case ErrorCode::BlockCountMismatch: return "BlockCountMismatch";
  case ErrorCode::BlockSizesMismatch: return "BlockSizesMismatch";
  case ErrorCode::OddInput: return "OddInput";
  case ErrorCode::UnsupportedStabilizer: return "UnsupportedStabilizer";
  case ErrorCode::NormalizerEqualsH: return "NormalizerEqualsH";
  case ErrorCode::TooLarge: return "TooLarge";
  case ErrorCode::IndexBoundExceeded: return "IndexBoundExceeded";
  case ErrorCode::NotSubgroup: return "NotSubgroup";
  case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
  case ErrorCode::MalformedGraph: return "MalformedGraph";
  case ErrorCode::InvalidParameters: return "InvalidParameters";
  case ErrorCode::OmegaEqualsPsi: return "OmegaEqualsPsi";
  case ErrorCode::NoCofactorPrimes: return "NoCofactorPrimes";
  case ErrorCode::NOutOfRange: return "NOutOfRange";
  case ErrorCode::UnknownGroup: return "UnknownGroup";
  case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "UnknownError";
}

bool isResourceError(ErrorCode code)
{
  switch (code) {
  case ErrorCode::FactorBoundExceeded:
  case ErrorCode::BoundExceeded:
  case ErrorCode::OrderExceedsBound:
  case ErrorCode::TooLarge:
  case ErrorCode::IndexBoundExceeded:
  case ErrorCode::SearchBudgetExceeded:
    return true;
  default:
    return false;
  }
}

} // namespace bcl
