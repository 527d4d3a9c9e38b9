#include "wfg/error.hpp"

namespace wfg {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::InvalidComplex: return "InvalidComplex";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::BadPermutation: return "BadPermutation";
    case ErrorKind::BadTree: return "BadTree";
    case ErrorKind::MissingTree: return "MissingTree";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::NotAFiltration: return "NotAFiltration";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::ConditionFailed: return "ConditionFailed";
    case ErrorKind::HasTriangles: return "HasTriangles";
    case ErrorKind::ZeroWeightEdge: return "ZeroWeightEdge";
    case ErrorKind::NonPositive: return "NonPositive";
    case ErrorKind::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorKind::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorKind::HypothesesFailed: return "HypothesesFailed";
    case ErrorKind::NotAGraph: return "NotAGraph";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NonIntegerRank: return "NonIntegerRank";
  }
  return "Unknown";
}

bool is_precondition_failure(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ConditionFailed:
    case ErrorKind::HasTriangles:
    case ErrorKind::ZeroWeightEdge:
    case ErrorKind::NonPositive:
    case ErrorKind::NonzeroConstantTerm:
    case ErrorKind::TruncationTooSmall:
    case ErrorKind::HypothesesFailed:
    case ErrorKind::NotAGraph:
    case ErrorKind::TooLarge:
      return true;
    default:
      return false;
  }
}

}  // namespace wfg
