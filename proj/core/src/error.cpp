#include "gog/error.hpp"

namespace gog {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::FixedPointInvolution: return "FixedPointInvolution";
    case ErrorCode::BrokenInvolution: return "BrokenInvolution";
    case ErrorCode::IncidenceMismatch: return "IncidenceMismatch";
    case ErrorCode::DanglingVertexRef: return "DanglingVertexRef";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::UnknownRoot: return "UnknownRoot";
    case ErrorCode::PartialConflict: return "PartialConflict";
    case ErrorCode::Empty: return "Empty";
    case ErrorCode::EdgeOrderNotSymmetric: return "EdgeOrderNotSymmetric";
    case ErrorCode::DivisibilityViolation: return "DivisibilityViolation";
    case ErrorCode::NonPositiveOrder: return "NonPositiveOrder";
    case ErrorCode::MissingOrder: return "MissingOrder";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::OrderOverflow: return "OrderOverflow";
    case ErrorCode::NotTrivial: return "NotTrivial";
    case ErrorCode::NotTreeEdge: return "NotTreeEdge";
    case ErrorCode::NonIntegralRank: return "NonIntegralRank";
    case ErrorCode::NonIntegralCount: return "NonIntegralCount";
    case ErrorCode::NonPositiveCount: return "NonPositiveCount";
    case ErrorCode::NonIntegralTheta: return "NonIntegralTheta";
    case ErrorCode::UnknownClass: return "UnknownClass";
    case ErrorCode::MissingParam: return "MissingParam";
    case ErrorCode::WrongRank: return "WrongRank";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::UnclassifiableShape: return "UnclassifiableShape";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::NonExactDivision: return "NonExactDivision";
  }
  return "Unknown";
}

}  // namespace gog
