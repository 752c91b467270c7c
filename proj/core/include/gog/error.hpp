#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gog {

enum class ErrorCode {
  // graph-core
  FixedPointInvolution,
  BrokenInvolution,
  IncidenceMismatch,
  DanglingVertexRef,
  DuplicateId,
  UnknownEdge,
  NotConnected,
  UnknownRoot,
  PartialConflict,
  // gog-model
  Empty,
  EdgeOrderNotSymmetric,
  DivisibilityViolation,
  NonPositiveOrder,
  MissingOrder,
  SyntaxError,
  NotNormalized,
  OrderOverflow,
  // normalize
  NotTrivial,
  NotTreeEdge,
  // invariants / counting
  NonIntegralRank,
  NonIntegralCount,
  NonPositiveCount,
  NonIntegralTheta,
  UnknownClass,
  MissingParam,
  WrongRank,
  TooLarge,
  // classify
  UnclassifiableShape,
  InvariantViolation,
  // oracle
  DegreeTooLarge,
  NonExactDivision,
};

/// Stable name used on the CLI error stream, e.g. "DivisibilityViolation".
std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gog
