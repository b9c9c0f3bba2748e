#include "fullex/error.h"

namespace fullex {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotCubic: return "NotCubic";
    case ErrorCode::kNotSymmetric: return "NotSymmetric";
    case ErrorCode::kSelfLoopOrMultiEdge: return "SelfLoopOrMultiEdge";
    case ErrorCode::kNotSpherical: return "NotSpherical";
    case ErrorCode::kBadFaceSize: return "BadFaceSize";
    case ErrorCode::kNotAMatching: return "NotAMatching";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kTooFewVertices: return "TooFewVertices";
    case ErrorCode::kNoPerfectMatching: return "NoPerfectMatching";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kEdgeNotInGraph: return "EdgeNotInGraph";
    case ErrorCode::kBadLayerCount: return "BadLayerCount";
    case ErrorCode::kEnumerationUnavailable: return "EnumerationUnavailable";
    case ErrorCode::kBoundExceeded: return "BoundExceeded";
    case ErrorCode::kOddVertexCount: return "OddVertexCount";
    case ErrorCode::kMalformedInput: return "MalformedInput";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace fullex
