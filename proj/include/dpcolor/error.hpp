#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dpcolor {

enum class ErrorCode {
  kInvalidArgument,
  kDisconnected,
  kMalformedRotation,
  kNotACycle,
  kNotOuterFace,
  kSameVertex,
  kAdjacent,
  kCommonNeighbor,
  kNoCommonFace,
  kInvalidMatching,
  kUnlistedColor,
  kCycleInSelection,
  kNonPerfectMatching,
  kInvalidColoring,
  kSizeGuard,
  kUnknownName,
  kHypothesisViolated,
  kParse,
  kInternal,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kDisconnected: return "disconnected";
    case ErrorCode::kMalformedRotation: return "malformed_rotation";
    case ErrorCode::kNotACycle: return "not_a_cycle";
    case ErrorCode::kNotOuterFace: return "not_outer_face";
    case ErrorCode::kSameVertex: return "same_vertex";
    case ErrorCode::kAdjacent: return "adjacent";
    case ErrorCode::kCommonNeighbor: return "common_neighbor";
    case ErrorCode::kNoCommonFace: return "no_common_face";
    case ErrorCode::kInvalidMatching: return "invalid_matching";
    case ErrorCode::kUnlistedColor: return "unlisted_color";
    case ErrorCode::kCycleInSelection: return "cycle_in_selection";
    case ErrorCode::kNonPerfectMatching: return "non_perfect_matching";
    case ErrorCode::kInvalidColoring: return "invalid_coloring";
    case ErrorCode::kSizeGuard: return "size_guard";
    case ErrorCode::kUnknownName: return "unknown_name";
    case ErrorCode::kHypothesisViolated: return "hypothesis_violated";
    case ErrorCode::kParse: return "parse_error";
    case ErrorCode::kInternal: return "internal_error";
  }
  return "unknown";
}

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dpcolor
