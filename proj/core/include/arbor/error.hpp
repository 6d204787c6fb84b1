#pragma once

#include <stdexcept>
#include <string>

namespace arbor {

enum class ErrorCode {
  kNotATree,
  kBadVertex,
  kNotAdjacent,
  kCapInfeasible,
  kTooLarge,
  kHypothesisViolated,
  kPartialColoring,
  kPreconditionViolated,
  kDegreeTooHigh,
  kNoTwoPreLeaves,
  kIndependentSetNotFound,
  kBadEntry,
  kParse,
  kInvariantViolation,
};

const char* to_string(ErrorCode code) noexcept;

/// Base exception for every failure raised by the library.
///
/// Everything except kInvariantViolation signals a violated precondition or
/// malformed input; kInvariantViolation means a constructed object failed its
/// own independent re-check and indicates a bug.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

enum class NotATreeReason { kCycle, kDisconnected, kSelfLoop, kDuplicateEdge, kBadVertexId };

const char* to_string(NotATreeReason reason) noexcept;

class NotATree : public Error {
 public:
  NotATree(NotATreeReason reason, const std::string& detail);

  NotATreeReason reason() const noexcept { return reason_; }

 private:
  NotATreeReason reason_;
};

}  // namespace arbor
