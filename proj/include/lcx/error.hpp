#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lcx {

enum class ErrorCode {
  IncomparableCardinals,
  MismatchedSpace,
  UncountableIndex,
  InvalidPresentation,
  FiniteTheta,
  CompactBase,
  CompactSpace,
  InconsistentDescription,
  DegreeViolation,
  ShapeMismatch,
  NonPositiveEntry,
  NegativeEntry,
  MissingCert,
  NotEmbedding,
  IndexBeyondTruncation,
  StencilTooWide,
  NonAbelianUnsupported,
  OverflowOutsideWindow,
  NonPositiveT,
  UnevaluableSeminorm,
  GridTooCoarse,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lcx
