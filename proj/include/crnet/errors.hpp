// Copyright (c) the crnet contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace crnet {

enum class ErrorCode {
  // graph validation
  DuplicateNode,
  SelfLoopEdge,
  IsolatedNode,
  NegativeCoordinate,
  DimensionMismatch,
  MergeableParallelEdges,
  // mass action
  RateLengthMismatch,
  NonIntegerExponentAtEvaluation,
  // cone geometry
  PointNotInSet,
  // graph surgery
  SplitConeViolation,
  EmptyExtremalSet,
  // realization preconditions
  NotEndotactic,
  ReplacementInfeasible,
  NotWeaklyReversible,
  WrongDimension,
  NotStronglyEndotactic,
  InteriorSourcePresent,
  PostconditionFailed,
  // rate witness search
  ExponentNotASource,
  NoPositiveSolution,
  // parser
  SyntaxError,
  NegativeCoefficient,
  MissingRate,
  DuplicateSpeciesDeclaration,
  // fixture generator
  RejectionBudgetExceeded,
  // should-not-happen guards
  InternalInvariantBroken,
};

const char* error_code_name(ErrorCode code);

/// Single exception type for all library errors; `code()` carries the
/// machine-readable reason, what() a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace crnet
