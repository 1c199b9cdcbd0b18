#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace trileib {

struct CheckReport;

enum class ErrorCode {
  DimMismatch,
  AmbientMismatch,
  NotContained,
  NotAnIdeal,
  NotSquareZero,
  NotADerivation,
  NotAMorphism,
  IdealClosureFailure,
  NotWellDefined,
  NotAnEmbeddingTensor,
  NotAnAction,
  NotHomomorphicET,
  NotInvertible,
  IntertwiningFailure,
  NotANijenhuisElement,
  ParseError,
  SchemaError,
  IndexOutOfRange,
};

std::string_view error_name(ErrorCode code);

/// Every failure raised by the library. Failures that come from an identity
/// check carry the report that located the violating tuples.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  Error(ErrorCode code, const std::string& what, CheckReport report);

  ErrorCode code() const noexcept { return code_; }
  const CheckReport* report() const noexcept { return report_.get(); }

 private:
  ErrorCode code_;
  std::shared_ptr<const CheckReport> report_;
};

}  // namespace trileib
