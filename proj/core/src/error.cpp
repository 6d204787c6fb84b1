#include "arbor/error.hpp"

namespace arbor {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kNotATree: return "NotATree";
    case ErrorCode::kBadVertex: return "BadVertex";
    case ErrorCode::kNotAdjacent: return "NotAdjacent";
    case ErrorCode::kCapInfeasible: return "CapInfeasible";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kHypothesisViolated: return "HypothesisViolated";
    case ErrorCode::kPartialColoring: return "PartialColoring";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kDegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::kNoTwoPreLeaves: return "NoTwoPreLeaves";
    case ErrorCode::kIndependentSetNotFound: return "IndependentSetNotFound";
    case ErrorCode::kBadEntry: return "BadEntry";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

const char* to_string(NotATreeReason reason) noexcept {
  switch (reason) {
    case NotATreeReason::kCycle: return "cycle";
    case NotATreeReason::kDisconnected: return "disconnected";
    case NotATreeReason::kSelfLoop: return "self-loop";
    case NotATreeReason::kDuplicateEdge: return "duplicate-edge";
    case NotATreeReason::kBadVertexId: return "bad-vertex-id";
  }
  return "unknown";
}

NotATree::NotATree(NotATreeReason reason, const std::string& detail)
    : Error(ErrorCode::kNotATree, std::string(to_string(reason)) + " (" + detail + ")"),
      reason_(reason) {}

}  // namespace arbor
