#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wfg {

enum class ErrorKind {
  // input and schema problems
  ParseError,
  SchemaError,
  InvalidComplex,
  InvalidArgument,
  BadPermutation,
  BadTree,
  MissingTree,
  NotConnected,
  NotAFiltration,
  ShapeMismatch,
  OrderMismatch,
  // mathematical preconditions
  ConditionFailed,
  HasTriangles,
  ZeroWeightEdge,
  NonPositive,
  NonzeroConstantTerm,
  TruncationTooSmall,
  HypothesesFailed,
  NotAGraph,
  TooLarge,
  // internal consistency
  NonIntegerRank,
};

std::string_view to_string(ErrorKind kind) noexcept;

// True for failures of a mathematical premise (as opposed to malformed input).
bool is_precondition_failure(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace wfg
