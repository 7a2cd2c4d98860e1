#include "lcx/error.hpp"

namespace lcx {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::IncomparableCardinals: return "IncomparableCardinals";
    case ErrorCode::MismatchedSpace: return "MismatchedSpace";
    case ErrorCode::UncountableIndex: return "UncountableIndex";
    case ErrorCode::InvalidPresentation: return "InvalidPresentation";
    case ErrorCode::FiniteTheta: return "FiniteTheta";
    case ErrorCode::CompactBase: return "CompactBase";
    case ErrorCode::CompactSpace: return "CompactSpace";
    case ErrorCode::InconsistentDescription: return "InconsistentDescription";
    case ErrorCode::DegreeViolation: return "DegreeViolation";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NonPositiveEntry: return "NonPositiveEntry";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::MissingCert: return "MissingCert";
    case ErrorCode::NotEmbedding: return "NotEmbedding";
    case ErrorCode::IndexBeyondTruncation: return "IndexBeyondTruncation";
    case ErrorCode::StencilTooWide: return "StencilTooWide";
    case ErrorCode::NonAbelianUnsupported: return "NonAbelianUnsupported";
    case ErrorCode::OverflowOutsideWindow: return "OverflowOutsideWindow";
    case ErrorCode::NonPositiveT: return "NonPositiveT";
    case ErrorCode::UnevaluableSeminorm: return "UnevaluableSeminorm";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace lcx
